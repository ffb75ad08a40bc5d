#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ugx/normalize.hpp"
#include "ugx/sdp.hpp"

namespace ugx {

struct RoundingParams {
    double R = 0.2;  // radius base, must lie in (0, 1/4)
    std::uint64_t seed = 0;
    std::int64_t trials = 1;
    enum class Fallback { random, fixed0 } fallback = Fallback::random;
};

struct RoundingOutcome {
    int initial_vertex = -1;
    int initial_state = -1;
    double t = 0.0;  // norm threshold in [0, ||u_i||^2]
    double r = 0.0;  // radius in [R, 2R]
    std::vector<int> s_sizes;  // |S_v| per vertex, always 0 or 1
    std::vector<char> in_x;    // decided-vertex indicator
    std::int64_t x_size = 0;
    Assignment assignment;     // decided labels plus fallback labels
    double satisfied = 0.0;    // fraction of all constraints satisfied
    std::int64_t cut_edges = 0;
    bool failed = false;       // |X| <= (1 - 100*eps/(h*R)) * n
    std::int64_t trial = 0;
};

struct MonitorRow {
    std::string name;
    double estimate = 0.0;
    double stderr_value = 0.0;
    double bound = 0.0;
    bool pass = true;
};

struct MonitorReport {
    std::int64_t trials = 0;
    int fixed_vertex = 0;
    std::vector<MonitorRow> rows;
    bool all_pass() const;
};

// Partial injective map sigma_vw: p -> q iff ||nv_p - nw_q||^2 <= 4R, over
// nonzero labels; -1 where undefined. Throws numeric_error if some p has two
// images (impossible when the normalization properties hold, since distinct
// same-vertex unit vectors are at squared distance 2 > 8R).
std::vector<int> sigma(const NormalizedSolution& ns, int v, int w, double R);

// Shared precomputation for the rounding operations on one
// (instance, solution, normalized solution, R) input: squared norms, the
// Gram matrix of the normalized vectors, the full sigma table, the SDP
// objective, and the certified expansion lower bound used by the failure
// gate (exact h when n <= 24, else lambda2).
class RoundingContext {
public:
    RoundingContext(const UGInstance& inst, const SdpSolution& s,
                    const NormalizedSolution& ns, double R);

    const UGInstance& inst() const { return *inst_; }
    const SdpSolution& sdp() const { return *sdp_; }
    const NormalizedSolution& normalized() const { return *ns_; }
    double R() const { return r_base_; }
    double epsilon() const { return epsilon_; }
    const std::vector<double>& edge_costs() const { return edge_costs_; }
    double h_certified() const { return h_certified_; }
    double lambda2() const { return lambda2_; }
    bool h_exact() const { return h_exact_; }
    double sq_norm(int v, int i) const {
        return sq_norm_[static_cast<std::size_t>(v) * k_ + i];
    }
    // Squared distance between normalized vectors of two live labels.
    double norm_dist2(int v, int i, int w, int j) const;
    // sigma_vw(p), or -1 when undefined; requires live p.
    int sigma_lookup(int v, int p, int w) const;
    int n() const { return n_; }
    int k() const { return k_; }
    // |X| threshold of the failure gate: (1 - 100*eps/(h*R)) * n.
    double fail_threshold() const;

private:
    const UGInstance* inst_;
    const SdpSolution* sdp_;
    const NormalizedSolution* ns_;
    int n_, k_;
    double r_base_;
    double epsilon_;
    std::vector<double> edge_costs_;
    double lambda2_ = 0.0;
    double h_certified_ = 0.0;
    bool h_exact_ = false;
    std::vector<double> sq_norm_;    // per (v,i)
    std::vector<int> compact_;       // row -> live index, -1 when zero
    MatrixX<double> gram_;           // live x live Gram of normalized vectors
    std::vector<int> sigma_table_;   // [pair(v,w)][p] with v < w
    std::vector<int> sigma_rev_;     // [pair(v,w)][q] = p (inverse direction)
    std::size_t pair_offset(int v, int w) const;

    friend RoundingOutcome round_once_impl(const RoundingContext&, const RoundingParams&,
                                           std::uint64_t, int);
};

// One pass of the propagation rounding with the fixed sampling order
// u -> i -> t -> r. Checks the hard invariants (|S_v| <= 1 and pairwise
// sigma-consistency of the decided labels) and throws numeric_error on any
// violation. The failed flag implements the theorem's size gate.
RoundingOutcome round_once(const RoundingContext& ctx, const RoundingParams& p,
                           std::uint64_t trial_seed);
RoundingOutcome round_once(const UGInstance& inst, const SdpSolution& s,
                           const NormalizedSolution& ns, const RoundingParams& p,
                           std::uint64_t trial_seed);

// Best of p.trials independent trials with derived seeds: maximum satisfied
// fraction among non-failed outcomes (ties to the lower trial index), or the
// overall maximum, still flagged failed, when every trial fails.
RoundingOutcome round_best_of(const RoundingContext& ctx, const RoundingParams& p);
RoundingOutcome round_best_of(const UGInstance& inst, const SdpSolution& s,
                              const NormalizedSolution& ns, const RoundingParams& p);

// Exhausts the randomness: every live (u, i), every threshold cell (distinct
// squared norms and 0, clipped to [0, ||u_i||^2]), every radius cell
// (distinct normalized distances to nu_i inside [R, 2R], plus R and 2R).
// Fallback labels are fixed to 0. Throws size_error when n*k > 2000.
RoundingOutcome round_derandomized(const RoundingContext& ctx, const RoundingParams& p);
RoundingOutcome round_derandomized(const UGInstance& inst, const SdpSolution& s,
                                   const NormalizedSolution& ns, const RoundingParams& p);

// Monte-Carlo checks of the per-lemma quantitative claims; `trials` trials
// with the initial vertex fixed to fixed_u feed the fixed-vertex membership
// rows, and `trials` unconstrained trials feed the rest.
MonitorReport lemma_monitors(const RoundingContext& ctx, const RoundingParams& p,
                             std::int64_t trials, int fixed_u = 0);
MonitorReport lemma_monitors(const UGInstance& inst, const SdpSolution& s,
                             const NormalizedSolution& ns, const RoundingParams& p,
                             std::int64_t trials, int fixed_u = 0);

std::string outcome_to_json(const RoundingOutcome& o);
std::string monitor_report_to_csv(const MonitorReport& rep);

}  // namespace ugx
