#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ugx/sdp.hpp"

namespace ugx {

// Normalized companion of an SDP solution: a unit vector for every
// (vertex, label) whose original squared norm exceeds zero_tol, with pairwise
// inner products <u_i, v_j> / max(||u_i||^2, ||v_j||^2). Labels below the
// threshold are excluded and listed in zero_labels (their rows are zero).
struct NormalizedSolution {
    int n = 0;
    int k = 0;
    int dim = 0;
    RowMatrixXd vectors;
    std::vector<std::pair<int, int>> zero_labels;
    std::vector<char> is_zero;  // size n*k, 1 for excluded labels

    Index row(int v, int i) const { return static_cast<Index>(v) * k + i; }
    bool zero(int v, int i) const { return is_zero[static_cast<std::size_t>(row(v, i))] != 0; }
};

// Max violation per property of the normalized object:
//   triangle     squared-distance triangle inequality among the unit vectors
//   inner_law    <nu_i, nv_j> = <u_i, v_j> / max(||u_i||^2, ||v_j||^2)
//   unit_norm    | ||nu_i||^2 - 1 |
//   orthogonality same-vertex <nu_i, nu_j>, i != j
//   factor2      ||nv_j - nu_i||^2 <= 2 ||v_j - u_i||^2 / max(...)
struct NormalizationReport {
    double tol = 0.0;
    double triangle = 0.0;
    double inner_law = 0.0;
    double unit_norm = 0.0;
    double orthogonality = 0.0;
    double factor2 = 0.0;
    std::int64_t triples_checked = 0;
    bool triples_exhaustive = false;

    double max_violation() const;
    bool pass() const { return max_violation() <= tol; }
};

// Realizes the normalized vectors by Gram factorization: form the target
// Gram matrix over nonzero labels, symmetrize, eigendecompose, clamp
// eigenvalues in [-psd_tol, 0) to zero (eigenvalues below -psd_tol fail),
// scale the eigenbasis by sqrt(eigenvalue), and rescale rows to exact unit
// norm. Throws numeric_error when the target matrix is not PSD within
// psd_tol and input_error when some vertex has no label above zero_tol.
NormalizedSolution normalize(const SdpSolution& s, double zero_tol = 1e-12,
                             double psd_tol = 1e-8);

// Checks the inner-product law, unit norms, same-vertex orthogonality, and
// the factor-2 distance bound over all nonzero pairs; the triangle
// inequality exhaustively when the nonzero-label count is <= 60, else over
// triple_budget sampled triples plus edge-local triples when a graph is
// given.
NormalizationReport verify_normalization(const SdpSolution& s, const NormalizedSolution& ns,
                                         double tol = 1e-8,
                                         std::int64_t triple_budget = 100000,
                                         const Graph* g = nullptr);

NormalizedSolution parse_normalized(const std::string& text);
std::string serialize_normalized(const NormalizedSolution& ns);

}  // namespace ugx
