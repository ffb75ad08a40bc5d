#include "ugx/emd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ugx/errors.hpp"
#include "ugx/parallel.hpp"
#include "ugx/random.hpp"

namespace ugx {

double min_cost_assignment(const MatrixX<double>& cost, std::vector<int>& row_to_col) {
    const Index n = cost.rows();
    if (cost.cols() != n || n < 1) throw input_error("min_cost_assignment: square matrix required");
    const double inf = std::numeric_limits<double>::infinity();
    // Shortest augmenting paths with dual potentials; 1-based with column 0
    // as the virtual root.
    std::vector<double> pot_row(n + 1, 0.0), pot_col(n + 1, 0.0), min_to(n + 1);
    std::vector<int> col_row(n + 1, 0);  // col_row[j] = row matched to column j
    std::vector<int> way(n + 1, 0);
    for (Index i = 1; i <= n; ++i) {
        col_row[0] = static_cast<int>(i);
        int j0 = 0;
        std::fill(min_to.begin(), min_to.end(), inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = col_row[j0];
            double delta = inf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - pot_row[i0] - pot_col[j];
                if (cur < min_to[j]) {
                    min_to[j] = cur;
                    way[j] = j0;
                }
                if (min_to[j] < delta) {
                    delta = min_to[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    pot_row[col_row[j]] += delta;
                    pot_col[j] -= delta;
                } else {
                    min_to[j] -= delta;
                }
            }
            j0 = j1;
        } while (col_row[j0] != 0);
        do {
            const int j1 = way[j0];
            col_row[j0] = col_row[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    row_to_col.assign(n, -1);
    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        row_to_col[col_row[j] - 1] = j - 1;
        total += cost(col_row[j] - 1, j - 1);
    }
    return total;
}

namespace {

MatrixX<double> pair_cost(const SdpSolution& s, int u, int v) {
    MatrixX<double> cost(s.k, s.k);
    for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < s.k; ++j)
            cost(i, j) =
                (s.vectors.row(s.row(u, i)) - s.vectors.row(s.row(v, j))).squaredNorm();
    return cost;
}

}  // namespace

EmdReport emd_pair(const SdpSolution& s, int u, int v) {
    if (u < 0 || u >= s.n || v < 0 || v >= s.n) throw input_error("emd_pair: vertex out of range");
    EmdReport rep;
    rep.value = min_cost_assignment(pair_cost(s, u, v), rep.matching);
    return rep;
}

AvgEmdReport avg_emd(const SdpSolution& s, bool exact_mode, std::int64_t pair_budget,
                     std::uint64_t seed) {
    AvgEmdReport rep;
    if (exact_mode) {
        if (s.n > 300)
            throw size_error("avg_emd: exact mode requires n <= 300; use sampled mode");
        rep.exact = true;
        rep.pairs = static_cast<std::int64_t>(s.n) * s.n;
        // Ordered-pair mean: diagonal contributes 0, off-diagonal pairs are
        // symmetric, so sum unordered pairs once and double.
        const std::int64_t unordered = static_cast<std::int64_t>(s.n) * (s.n - 1) / 2;
        std::vector<double> partial(std::max(1, thread_count()) + 1, 0.0);
        parallel_chunks(unordered, [&](std::int64_t lo, std::int64_t hi, int w) {
            double sum = 0.0;
            std::vector<int> match;
            for (std::int64_t idx = lo; idx < hi; ++idx) {
                // Unrank idx -> (u, v) with u < v.
                std::int64_t u = 0, before = 0;
                while (before + (s.n - 1 - u) <= idx) before += s.n - 1 - u, ++u;
                const std::int64_t v = u + 1 + (idx - before);
                sum += min_cost_assignment(
                    pair_cost(s, static_cast<int>(u), static_cast<int>(v)), match);
            }
            partial[w] = sum;
        });
        double total = 0.0;
        for (double p : partial) total += p;
        rep.value = 2.0 * total / static_cast<double>(rep.pairs);
        rep.stderr_value = 0.0;
        return rep;
    }
    if (pair_budget < 1) throw input_error("avg_emd: sampled mode needs pair_budget >= 1");
    rep.exact = false;
    rep.pairs = pair_budget;
    Rng rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    std::vector<int> match;
    for (std::int64_t t = 0; t < pair_budget; ++t) {
        const int u = static_cast<int>(rng.bounded(s.n));
        const int v = static_cast<int>(rng.bounded(s.n));
        const double d =
            (u == v) ? 0.0 : min_cost_assignment(pair_cost(s, u, v), match);
        sum += d;
        sum_sq += d * d;
    }
    const double b = static_cast<double>(pair_budget);
    rep.value = sum / b;
    if (pair_budget > 1) {
        const double var = std::max(0.0, (sum_sq - sum * sum / b) / (b - 1.0));
        rep.stderr_value = std::sqrt(var / b);
    }
    return rep;
}

}  // namespace ugx
