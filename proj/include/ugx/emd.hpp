#pragma once

#include <cstdint>
#include <vector>

#include "ugx/sdp.hpp"

namespace ugx {

// Earthmover distance between the label-vector sets of two vertices:
//   Delta(u, v) = min over permutations sigma of sum_i ||u_i - v_{sigma(i)}||^2.
struct EmdReport {
    double value = 0.0;
    std::vector<int> matching;  // matching[i] = sigma(i)
};

struct AvgEmdReport {
    double value = 0.0;
    double stderr_value = 0.0;  // 0 in exact mode
    bool exact = false;
    std::int64_t pairs = 0;     // ordered pairs averaged over / samples drawn
};

// Exact minimum-cost perfect matching on the k x k squared-distance matrix
// (shortest augmenting paths with potentials). Ties resolve to the
// lowest-index matching, making the result deterministic.
double min_cost_assignment(const MatrixX<double>& cost, std::vector<int>& row_to_col);

EmdReport emd_pair(const SdpSolution& s, int u, int v);

// Mean of Delta(u, v) over ordered vertex pairs, diagonal included (its terms
// are 0). Exact mode enumerates all pairs and requires n <= 300; sampled mode
// draws pair_budget independent uniform pairs and reports the standard error.
AvgEmdReport avg_emd(const SdpSolution& s, bool exact_mode, std::int64_t pair_budget = 0,
                     std::uint64_t seed = 0);

}  // namespace ugx
