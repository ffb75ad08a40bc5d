#include "ugx/normalize.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ugx/errors.hpp"
#include "ugx/json_util.hpp"
#include "ugx/random.hpp"

namespace ugx {

double NormalizationReport::max_violation() const {
    return std::max({triangle, inner_law, unit_norm, orthogonality, factor2});
}

NormalizedSolution normalize(const SdpSolution& s, double zero_tol, double psd_tol) {
    if (s.n < 1 || s.k < 1 || s.dim < 1 ||
        s.vectors.rows() != static_cast<Index>(s.n) * s.k || s.vectors.cols() != s.dim)
        throw input_error("normalize: malformed solution");

    const Index rows = s.vectors.rows();
    NormalizedSolution ns;
    ns.n = s.n;
    ns.k = s.k;
    ns.is_zero.assign(static_cast<std::size_t>(rows), 0);

    std::vector<Index> live;  // nonzero (vertex,label) rows, in row order
    live.reserve(static_cast<std::size_t>(rows));
    VectorX<double> sq_norm(rows);
    for (Index r = 0; r < rows; ++r) {
        sq_norm[r] = s.vectors.row(r).squaredNorm();
        if (sq_norm[r] > zero_tol) {
            live.push_back(r);
        } else {
            ns.is_zero[static_cast<std::size_t>(r)] = 1;
            ns.zero_labels.emplace_back(static_cast<int>(r / s.k), static_cast<int>(r % s.k));
        }
    }
    for (int v = 0; v < s.n; ++v) {
        bool any = false;
        for (int i = 0; i < s.k && !any; ++i) any = !ns.zero(v, i);
        if (!any)
            throw input_error("normalize: vertex " + std::to_string(v) +
                              " has no label with squared norm above zero_tol");
    }

    const Index m = static_cast<Index>(live.size());
    // Target Gram matrix: raw inner products divided by the larger of the two
    // squared norms. Diagonal is exactly 1.
    MatrixX<double> raw = MatrixX<double>(m, m);
    {
        RowMatrixXd live_vecs(m, s.dim);
        for (Index a = 0; a < m; ++a) live_vecs.row(a) = s.vectors.row(live[a]);
        raw = live_vecs * live_vecs.transpose();
    }
    MatrixX<double> target(m, m);
    for (Index a = 0; a < m; ++a) {
        target(a, a) = 1.0;
        for (Index b = a + 1; b < m; ++b) {
            const double denom = std::max(sq_norm[live[a]], sq_norm[live[b]]);
            const double val = raw(a, b) / denom;
            target(a, b) = val;
            target(b, a) = val;
        }
    }
    target = 0.5 * (target + target.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<MatrixX<double>> es(target);
    if (es.info() != Eigen::Success)
        throw numeric_error("normalize: eigendecomposition failed");
    VectorX<double> lam = es.eigenvalues();
    if (lam[0] < -psd_tol)
        throw numeric_error("normalize: target Gram matrix is not PSD (min eigenvalue " +
                            fmt_g17(lam[0]) + " < -psd_tol); the input violates the "
                            "feasibility hypothesis beyond tolerance");
    // Keep directions above the numerical-rank cutoff: eigenvalues at exact
    // zero come back as +-O(eps * lambda_max) roundoff and would otherwise
    // inflate dim with meaningless coordinates.
    const double rank_cutoff = static_cast<double>(m) *
                               std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(lam[m - 1]), 1.0);
    std::vector<Index> keep;
    for (Index j = 0; j < m; ++j)
        if (lam[j] > rank_cutoff) keep.push_back(j);
    ns.dim = static_cast<int>(std::max<std::size_t>(1, keep.size()));

    ns.vectors = RowMatrixXd::Zero(rows, ns.dim);
    for (Index a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < keep.size(); ++c)
            ns.vectors(live[a], static_cast<Index>(c)) =
                std::sqrt(lam[keep[c]]) * es.eigenvectors()(a, keep[c]);
        const double nrm = ns.vectors.row(live[a]).norm();
        if (nrm < 0.5)
            throw numeric_error("normalize: factorized row collapsed (norm " + fmt_g17(nrm) +
                                "); target diagonal should be 1");
        ns.vectors.row(live[a]) /= nrm;
    }
    return ns;
}

namespace {

inline double triangle_violation(const MatrixX<double>& g, Index a, Index b, Index c) {
    return 2.0 * (g(a, b) + g(b, c) - g(a, c) - g(b, b));
}

}  // namespace

NormalizationReport verify_normalization(const SdpSolution& s, const NormalizedSolution& ns,
                                         double tol, std::int64_t triple_budget,
                                         const Graph* graph) {
    if (ns.n != s.n || ns.k != s.k || ns.vectors.rows() != s.vectors.rows())
        throw input_error("verify_normalization: shape mismatch");
    NormalizationReport rep;
    rep.tol = tol;

    std::vector<Index> live;
    for (Index r = 0; r < s.vectors.rows(); ++r)
        if (!ns.is_zero[static_cast<std::size_t>(r)]) live.push_back(r);
    const Index m = static_cast<Index>(live.size());
    if (m == 0) return rep;

    VectorX<double> sq_norm(m);
    RowMatrixXd raw_vecs(m, s.dim), norm_vecs(m, ns.dim);
    for (Index a = 0; a < m; ++a) {
        raw_vecs.row(a) = s.vectors.row(live[a]);
        norm_vecs.row(a) = ns.vectors.row(live[a]);
        sq_norm[a] = raw_vecs.row(a).squaredNorm();
    }
    const MatrixX<double> raw = raw_vecs * raw_vecs.transpose();
    const MatrixX<double> g = norm_vecs * norm_vecs.transpose();

    for (Index a = 0; a < m; ++a) {
        rep.unit_norm = std::max(rep.unit_norm, std::abs(g(a, a) - 1.0));
        for (Index b = a + 1; b < m; ++b) {
            const double denom = std::max(sq_norm[a], sq_norm[b]);
            const double law = raw(a, b) / denom;
            rep.inner_law = std::max(rep.inner_law, std::abs(g(a, b) - law));
            if (live[a] / s.k == live[b] / s.k)
                rep.orthogonality = std::max(rep.orthogonality, std::abs(g(a, b)));
            // Factor-2 distance bound.
            const double lhs = g(a, a) + g(b, b) - 2.0 * g(a, b);
            const double rhs = 2.0 * (sq_norm[a] + sq_norm[b] - 2.0 * raw(a, b)) / denom;
            rep.factor2 = std::max(rep.factor2, lhs - rhs);
        }
    }
    rep.factor2 = std::max(rep.factor2, 0.0);

    if (m <= 60) {
        rep.triples_exhaustive = true;
        for (Index a = 0; a < m; ++a)
            for (Index c = a + 1; c < m; ++c)
                for (Index b = 0; b < m; ++b) {
                    if (b == a || b == c) continue;
                    rep.triangle = std::max(rep.triangle, triangle_violation(g, a, b, c));
                    ++rep.triples_checked;
                }
    } else {
        Rng rng(0x90A17E57u);
        for (std::int64_t t = 0; t < triple_budget; ++t) {
            const Index a = static_cast<Index>(rng.bounded(m));
            const Index b = static_cast<Index>(rng.bounded(m));
            const Index c = static_cast<Index>(rng.bounded(m));
            if (a == b || b == c || a == c) continue;
            rep.triangle = std::max(rep.triangle, triangle_violation(g, a, b, c));
            ++rep.triples_checked;
        }
        if (graph != nullptr) {
            // Map live row -> compact index for edge-local lookups.
            std::vector<Index> compact(static_cast<std::size_t>(s.vectors.rows()), -1);
            for (Index a = 0; a < m; ++a) compact[static_cast<std::size_t>(live[a])] = a;
            std::vector<Index> ids;
            for (const auto& [u, v] : graph->edges) {
                ids.clear();
                for (int i = 0; i < s.k; ++i) {
                    const Index ru = compact[static_cast<std::size_t>(ns.row(u, i))];
                    const Index rv = compact[static_cast<std::size_t>(ns.row(v, i))];
                    if (ru >= 0) ids.push_back(ru);
                    if (rv >= 0) ids.push_back(rv);
                }
                for (std::size_t x = 0; x < ids.size(); ++x)
                    for (std::size_t z = x + 1; z < ids.size(); ++z)
                        for (std::size_t y = 0; y < ids.size(); ++y) {
                            if (y == x || y == z) continue;
                            rep.triangle = std::max(
                                rep.triangle, triangle_violation(g, ids[x], ids[y], ids[z]));
                            ++rep.triples_checked;
                        }
            }
        }
    }
    rep.triangle = std::max(rep.triangle, 0.0);
    return rep;
}

std::string serialize_normalized(const NormalizedSolution& ns) {
    std::string out = "{\n";
    out += "  \"dim\": " + std::to_string(ns.dim) + ",\n";
    out += "  \"k\": " + std::to_string(ns.k) + ",\n";
    out += "  \"n\": " + std::to_string(ns.n) + ",\n";
    out += "  \"zero_labels\": [";
    for (std::size_t z = 0; z < ns.zero_labels.size(); ++z) {
        out += "[" + std::to_string(ns.zero_labels[z].first) + ", " +
               std::to_string(ns.zero_labels[z].second) + "]";
        if (z + 1 < ns.zero_labels.size()) out += ", ";
    }
    out += "],\n";
    out += "  \"vectors\": ";
    append_vectors_json(out, ns.vectors, ns.n, ns.k, "  ");
    out += "\n}\n";
    return out;
}

NormalizedSolution parse_normalized(const std::string& text) {
    const json j = parse_json_text(text, "normalized solution");
    NormalizedSolution ns;
    ns.dim = require_int(j, "dim", "normalized solution");
    ns.k = require_int(j, "k", "normalized solution");
    ns.n = require_int(j, "n", "normalized solution");
    if (ns.n < 1 || ns.k < 1 || ns.dim < 1)
        throw input_error("normalized solution: n, k, dim must be >= 1");
    ns.is_zero.assign(static_cast<std::size_t>(ns.n) * ns.k, 0);
    const json& zeros = require_field(j, "zero_labels", "normalized solution");
    if (!zeros.is_array())
        throw input_error("normalized solution: \"zero_labels\" must be an array");
    for (const json& z : zeros) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number_integer() ||
            !z[1].is_number_integer())
            throw input_error("normalized solution: zero_labels entries must be [v, i]");
        const int v = z[0].get<int>(), i = z[1].get<int>();
        if (v < 0 || v >= ns.n || i < 0 || i >= ns.k)
            throw input_error("normalized solution: zero_labels entry out of range");
        ns.zero_labels.emplace_back(v, i);
        ns.is_zero[static_cast<std::size_t>(ns.row(v, i))] = 1;
    }
    const json& vecs = require_field(j, "vectors", "normalized solution");
    if (!vecs.is_array() || static_cast<int>(vecs.size()) != ns.n)
        throw input_error("normalized solution: \"vectors\" must list one entry per vertex");
    ns.vectors.resize(static_cast<Index>(ns.n) * ns.k, ns.dim);
    for (int v = 0; v < ns.n; ++v) {
        const json& per_vertex = vecs[v];
        if (!per_vertex.is_array() || static_cast<int>(per_vertex.size()) != ns.k)
            throw input_error("normalized solution: vertex entry must list one vector per label");
        for (int i = 0; i < ns.k; ++i) {
            const json& vec = per_vertex[i];
            if (!vec.is_array() || static_cast<int>(vec.size()) != ns.dim)
                throw input_error("normalized solution: vector length must equal dim");
            for (int c = 0; c < ns.dim; ++c) {
                if (!vec[c].is_number())
                    throw input_error("normalized solution: coordinates must be numbers");
                ns.vectors(ns.row(v, i), c) = vec[c].get<double>();
            }
        }
    }
    return ns;
}

}  // namespace ugx
