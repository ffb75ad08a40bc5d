#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ugx/instance.hpp"
#include "ugx/types.hpp"

namespace ugx {

// Vector solution of the Unique Games SDP relaxation: one D-dimensional
// vector per (vertex, label), stored as row v*k + i.
struct SdpSolution {
    int n = 0;
    int k = 0;
    int dim = 0;
    RowMatrixXd vectors;

    Index row(int v, int i) const { return static_cast<Index>(v) * k + i; }
};

// Max violation per constraint family:
//   (1) same-vertex orthogonality  |<u_i, u_j>|
//   (2) per-vertex total norm      |sum_i ||u_i||^2 - 1|
//   (3) squared-distance triangle  ||a-c||^2 <= ||a-b||^2 + ||b-c||^2
//   (4) distance upper bound       ||u_i-v_j||^2 <= ||u_i||^2 + ||v_j||^2
//   (5) norm lower bound           ||u_i||^2 <= ||u_i-v_j||^2 + ||v_j||^2
struct FeasibilityReport {
    double tol = 0.0;
    double orthogonality = 0.0;
    double norm_sum = 0.0;
    double triangle = 0.0;
    double dist_upper = 0.0;
    double norm_lower = 0.0;
    std::int64_t triples_checked = 0;
    bool triples_exhaustive = false;

    double max_violation() const;
    bool pass() const { return max_violation() <= tol; }
};

struct SdpObjectiveReport {
    double epsilon = 0.0;               // mean of edge_costs
    std::vector<double> edge_costs;     // eps_vw per stored edge
};

// The intended integral embedding: one ambient dimension, value 1 for the
// assigned label and 0 otherwise. Every satisfied constraint contributes 0
// and every violated one contributes 2 before the 1/2 scaling, so
// sdp_objective == 1 - evaluate.
SdpSolution integral_solution(const UGInstance& inst, const Assignment& a);

// Direct sum of feasible solutions scaled by sqrt(weight): squared distances
// and inner products add across blocks, so feasibility is preserved and the
// objective is the weighted average. Weights must be positive and sum to 1.
SdpSolution mix_solutions(const std::vector<std::pair<SdpSolution, double>>& parts,
                          double weight_tol = 1e-9);

// Checks constraints (1), (2), (4), (5) over all pairs. (3) is exhaustive
// over all triples when n*k <= 60; otherwise triple_budget sampled triples
// plus, when a graph is supplied, every triple among the 2k vectors of each
// edge's endpoints.
FeasibilityReport verify_feasibility(const SdpSolution& s, double tol = 1e-9,
                                     std::int64_t triple_budget = 100000,
                                     const Graph* g = nullptr);

// eps_vw = 1/2 sum_i ||u_i - v_{pi_uv(i)}||^2 per edge; epsilon = mean.
SdpObjectiveReport sdp_objective(const UGInstance& inst, const SdpSolution& s);

void validate(const UGInstance& inst, const SdpSolution& s);

SdpSolution parse_sdp(const std::string& text);
std::string serialize_sdp(const SdpSolution& s);

// Shared writer for the nested [[vector...]...] array with 17-significant-
// digit decimals (also used by the normalized-solution file).
void append_vectors_json(std::string& out, const RowMatrixXd& rows, int n, int k,
                         const std::string& indent);

}  // namespace ugx
