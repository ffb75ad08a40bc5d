#pragma once

#include <cstdint>

#include "ugx/sdp.hpp"

namespace ugx {

struct OracleResult {
    Assignment best;
    double value = 0.0;
    std::int64_t enumerated = 0;  // k^n
};

// Exhaustive maximum of evaluate over all k^n assignments, enumerated in
// lexicographic (odometer) order with ties going to the earliest assignment.
// Throws size_error when k^n exceeds the budget.
OracleResult brute_force_opt(const UGInstance& inst, std::int64_t budget = 10000000);

// Minimum matching cost by enumerating all k! permutations; the independent
// reference for emd_pair. Throws size_error when k > k_max.
double emd_brute(const SdpSolution& s, int u, int v, int k_max = 6);

}  // namespace ugx
