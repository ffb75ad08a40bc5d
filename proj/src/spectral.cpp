#include "ugx/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ugx/errors.hpp"
#include "ugx/parallel.hpp"
#include "ugx/random.hpp"

namespace ugx {

namespace {

// y = (I - A/d) x without forming the matrix.
void apply_laplacian(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y = x;
    const double inv_d = 1.0 / g.d;
    for (const auto& [u, v] : g.edges) {
        y[u] -= inv_d * x[v];
        y[v] -= inv_d * x[u];
    }
}

// Smallest eigenvalue of the symmetric tridiagonal T(alpha, beta) and the
// last component of its eigenvector (used for the Lanczos residual bound).
void tridiag_bottom(const std::vector<double>& alpha, const std::vector<double>& beta,
                    double& theta, double& last_component) {
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    theta = es.eigenvalues()(0);
    last_component = es.eigenvectors()(m - 1, 0);
}

}  // namespace

double laplacian_lambda2_dense(const Graph& g) {
    validate(g);
    Eigen::MatrixXd l = Eigen::MatrixXd::Identity(g.n, g.n);
    const double inv_d = 1.0 / g.d;
    for (const auto& [u, v] : g.edges) {
        l(u, v) -= inv_d;
        l(v, u) -= inv_d;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
    return es.eigenvalues()(1);
}

double laplacian_lambda2(const Graph& g, double tol) {
    validate(g);
    const int n = g.n;

    // Orthonormal basis of the deflated subspace is not needed explicitly:
    // we keep every Lanczos vector orthogonal to the all-ones vector (the
    // known bottom eigenvector) and to all previous Lanczos vectors.
    const Eigen::VectorXd ones_unit = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));

    Rng rng(0x5EEDBA5Eull);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.unit() - 0.5;
    v -= ones_unit.dot(v) * ones_unit;
    double nrm = v.norm();
    if (nrm == 0.0) {
        v.setZero();
        v[0] = 1.0;
        v -= ones_unit.dot(v) * ones_unit;
        nrm = v.norm();
    }
    v /= nrm;

    const int max_iter = std::min(n - 1, 400);
    std::vector<Eigen::VectorXd> basis;
    basis.reserve(max_iter);
    std::vector<double> alpha, beta;
    Eigen::VectorXd w(n);

    double best_theta = std::numeric_limits<double>::quiet_NaN();
    double best_residual = std::numeric_limits<double>::infinity();

    basis.push_back(v);
    for (int j = 0; j < max_iter; ++j) {
        apply_laplacian(g, basis[j], w);
        alpha.push_back(basis[j].dot(w));
        // Full reorthogonalization (twice) against the deflated vector and
        // the whole basis; cheap at these sizes and keeps T faithful.
        for (int pass = 0; pass < 2; ++pass) {
            w -= ones_unit.dot(w) * ones_unit;
            for (const auto& b : basis) w -= b.dot(w) * b;
        }
        const double b_norm = w.norm();

        double theta, last;
        tridiag_bottom(alpha, beta, theta, last);
        const double residual = std::abs(b_norm * last);
        if (residual < best_residual) {
            best_residual = residual;
            best_theta = theta;
        }
        if (residual <= tol) return theta;
        if (b_norm <= 1e-14) return theta;  // invariant subspace: T is exact
        beta.push_back(b_norm);
        basis.push_back(w / b_norm);
    }

    if (n <= 512) return laplacian_lambda2_dense(g);
    throw eigensolver_error("laplacian_lambda2: no convergence after " +
                                std::to_string(max_iter) + " iterations",
                            best_theta, best_residual);
}

double edge_expansion_exact(const Graph& g, int max_n) {
    validate(g);
    if (g.n > max_n || g.n > 32)
        throw size_error("edge_expansion_exact: n=" + std::to_string(g.n) + " exceeds max_n=" +
                         std::to_string(std::min(max_n, 32)) +
                         "; use the Cheeger interval instead");
    const int n = g.n;
    const std::int64_t m_edges = g.num_edges();
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const auto& [u, v] : g.edges) {
        adj_mask[u] |= 1u << v;
        adj_mask[v] |= 1u << u;
    }

    // Expansion of X equals that of its complement, so enumerating X with
    // vertex 0 covers everything. The minimum is tracked as the exact
    // fraction (cut * n) / (|E| * min(|X|, n-|X|)) via integer cross products.
    const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1u);
    const std::int64_t num_rest = std::int64_t(1) << (n - 1);

    struct Best {
        std::int64_t num = 1;  // cut * n
        std::int64_t den = 0;  // |E| * min-size  (0 means "unset" = +inf)
    };
    std::vector<Best> best(std::max(1, thread_count()) + 1);

    parallel_chunks(num_rest - 1, [&](std::int64_t lo, std::int64_t hi, int worker) {
        Best local;
        for (std::int64_t rest = lo; rest < hi; ++rest) {
            // rest encodes X \ {0} as a subset of {1..n-1}; the range ends at
            // 2^(n-1)-2 so X = V never appears, while X = {0} (rest = 0) does.
            const std::uint32_t x = (static_cast<std::uint32_t>(rest) << 1) | 1u;
            if (x == full) continue;
            std::int64_t cut = 0;
            int size = 0;
            std::uint32_t rem = x;
            while (rem) {
                const int v = std::countr_zero(rem);
                rem &= rem - 1;
                ++size;
                cut += std::popcount(adj_mask[v] & ~x);
            }
            const int min_size = std::min(size, n - size);
            const std::int64_t num = cut * n;
            const std::int64_t den = m_edges * min_size;
            if (local.den == 0 || num * local.den < local.num * den) {
                local.num = num;
                local.den = den;
            }
        }
        best[static_cast<std::size_t>(worker)] = local;
    });

    Best overall;
    for (const Best& b : best) {
        if (b.den == 0) continue;
        if (overall.den == 0 || b.num * overall.den < overall.num * b.den) overall = b;
    }
    if (overall.den == 0) throw numeric_error("edge_expansion_exact: no subset evaluated");
    return static_cast<double>(overall.num) / static_cast<double>(overall.den);
}

SpectralReport spectral_report(const Graph& g) {
    SpectralReport r;
    r.lambda2 = laplacian_lambda2(g);
    const double lam = std::max(r.lambda2, 0.0);
    if (g.n <= 24) {
        r.h = edge_expansion_exact(g);
        r.h_is_exact = true;
        r.h_lower = r.h;
        r.h_upper = r.h;
        r.cheeger_lower = r.h * r.h / 8.0;
        r.cheeger_upper = r.h;
        const double tol = 1e-9;
        r.cheeger_ok = (r.cheeger_lower <= r.lambda2 + tol) && (r.lambda2 <= r.cheeger_upper + tol);
    } else {
        r.h_is_exact = false;
        r.h_lower = lam;
        r.h_upper = std::sqrt(8.0 * lam);
        r.cheeger_ok = true;
    }
    return r;
}

}  // namespace ugx
