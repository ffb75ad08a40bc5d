#include "ugx/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "ugx/errors.hpp"
#include "ugx/parallel.hpp"

namespace ugx {

OracleResult brute_force_opt(const UGInstance& inst, std::int64_t budget) {
    validate(inst);
    const int n = inst.graph.n;
    const int k = inst.k;
    std::int64_t total = 1;
    for (int v = 0; v < n; ++v) {
        if (total > budget / k + 1) {
            total = budget + 1;
            break;
        }
        total *= k;
    }
    if (total > budget)
        throw size_error("brute_force_opt: k^n exceeds budget " + std::to_string(budget));

    const std::int64_t m_edges = inst.graph.num_edges();
    struct Best {
        std::int64_t sat = -1;
        std::int64_t index = 0;
    };
    std::vector<Best> best(std::max(1, thread_count()) + 1);

    parallel_chunks(total, [&](std::int64_t lo, std::int64_t hi, int w) {
        // Decode the starting assignment (vertex 0 most significant, so the
        // linear index order is lexicographic), then advance like an odometer.
        std::vector<int> labels(n);
        std::int64_t rem = lo;
        for (int v = n - 1; v >= 0; --v) {
            labels[v] = static_cast<int>(rem % k);
            rem /= k;
        }
        Best local;
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            std::int64_t sat = 0;
            for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
                const auto [u, v] = inst.graph.edges[e];
                if (inst.perms[e][labels[u]] == labels[v]) ++sat;
            }
            if (sat > local.sat) {
                local.sat = sat;
                local.index = idx;
            }
            // Odometer increment (last vertex fastest).
            for (int v = n - 1; v >= 0; --v) {
                if (++labels[v] < k) break;
                labels[v] = 0;
            }
        }
        best[static_cast<std::size_t>(w)] = local;
    });

    Best overall;
    for (const Best& b : best) {
        if (b.sat < 0) continue;
        if (b.sat > overall.sat || (b.sat == overall.sat && b.index < overall.index))
            overall = b;
    }

    OracleResult res;
    res.enumerated = total;
    res.best.labels.resize(n);
    std::int64_t rem = overall.index;
    for (int v = n - 1; v >= 0; --v) {
        res.best.labels[v] = static_cast<int>(rem % k);
        rem /= k;
    }
    res.value = static_cast<double>(overall.sat) / static_cast<double>(m_edges);
    return res;
}

double emd_brute(const SdpSolution& s, int u, int v, int k_max) {
    if (u < 0 || u >= s.n || v < 0 || v >= s.n) throw input_error("emd_brute: vertex out of range");
    if (s.k > k_max)
        throw size_error("emd_brute: k=" + std::to_string(s.k) + " exceeds k_max=" +
                         std::to_string(k_max));
    std::vector<int> sigma(s.k);
    std::iota(sigma.begin(), sigma.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (int i = 0; i < s.k; ++i)
            cost += (s.vectors.row(s.row(u, i)) - s.vectors.row(s.row(v, sigma[i])))
                        .squaredNorm();
        best = std::min(best, cost);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

}  // namespace ugx
