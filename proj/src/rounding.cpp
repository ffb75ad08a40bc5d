#include "ugx/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ugx/errors.hpp"
#include "ugx/json_util.hpp"
#include "ugx/parallel.hpp"
#include "ugx/random.hpp"
#include "ugx/spectral.hpp"

namespace ugx {

bool MonitorReport::all_pass() const {
    for (const MonitorRow& row : rows)
        if (!row.pass) return false;
    return true;
}

std::vector<int> sigma(const NormalizedSolution& ns, int v, int w, double R) {
    if (R <= 0.0 || R >= 0.25) throw input_error("sigma: R must lie in (0, 1/4)");
    if (v < 0 || v >= ns.n || w < 0 || w >= ns.n) throw input_error("sigma: vertex out of range");
    std::vector<int> map(ns.k, -1);
    for (int p = 0; p < ns.k; ++p) {
        if (ns.zero(v, p)) continue;
        for (int q = 0; q < ns.k; ++q) {
            if (ns.zero(w, q)) continue;
            const double dist =
                (ns.vectors.row(ns.row(v, p)) - ns.vectors.row(ns.row(w, q))).squaredNorm();
            if (dist <= 4.0 * R) {
                if (map[p] != -1)
                    throw numeric_error(
                        "sigma: label has two images within 4R; same-vertex unit vectors "
                        "are not orthogonal enough (normalization violated)");
                map[p] = q;
            }
        }
    }
    // Injectivity (well-definedness of the reverse map).
    std::vector<char> hit(ns.k, 0);
    for (int p = 0; p < ns.k; ++p) {
        if (map[p] < 0) continue;
        if (hit[map[p]])
            throw numeric_error("sigma: two labels share an image within 4R (normalization "
                                "violated)");
        hit[map[p]] = 1;
    }
    return map;
}

std::size_t RoundingContext::pair_offset(int v, int w) const {
    // v < w; linear index of the pair in the upper triangle, times k.
    const std::size_t idx = static_cast<std::size_t>(v) * n_ -
                            static_cast<std::size_t>(v) * (v + 1) / 2 + (w - v - 1);
    return idx * static_cast<std::size_t>(k_);
}

double RoundingContext::norm_dist2(int v, int i, int w, int j) const {
    const int a = compact_[static_cast<std::size_t>(v) * k_ + i];
    const int b = compact_[static_cast<std::size_t>(w) * k_ + j];
    return gram_(a, a) + gram_(b, b) - 2.0 * gram_(a, b);
}

int RoundingContext::sigma_lookup(int v, int p, int w) const {
    if (v < w) return sigma_table_[pair_offset(v, w) + p];
    return sigma_rev_[pair_offset(w, v) + p];
}

double RoundingContext::fail_threshold() const {
    double slack = 0.0;
    if (epsilon_ > 0.0) {
        slack = (h_certified_ > 0.0)
                    ? 100.0 * epsilon_ / (h_certified_ * r_base_)
                    : std::numeric_limits<double>::infinity();
    }
    return (1.0 - slack) * static_cast<double>(n_);
}

RoundingContext::RoundingContext(const UGInstance& inst, const SdpSolution& s,
                                 const NormalizedSolution& ns, double R)
    : inst_(&inst), sdp_(&s), ns_(&ns), n_(s.n), k_(s.k), r_base_(R) {
    validate(inst, s);
    if (ns.n != s.n || ns.k != s.k || ns.vectors.rows() != s.vectors.rows())
        throw input_error("rounding: normalized solution does not match the SDP solution");
    if (R <= 0.0 || R >= 0.25) throw input_error("rounding: R must lie in (0, 1/4)");

    const Index rows = s.vectors.rows();
    sq_norm_.resize(static_cast<std::size_t>(rows));
    compact_.assign(static_cast<std::size_t>(rows), -1);
    std::vector<Index> live;
    for (Index r = 0; r < rows; ++r) {
        sq_norm_[static_cast<std::size_t>(r)] = s.vectors.row(r).squaredNorm();
        if (!ns.is_zero[static_cast<std::size_t>(r)]) {
            compact_[static_cast<std::size_t>(r)] = static_cast<int>(live.size());
            live.push_back(r);
        }
    }
    {
        RowMatrixXd live_vecs(static_cast<Index>(live.size()), ns.dim);
        for (std::size_t a = 0; a < live.size(); ++a) live_vecs.row(a) = ns.vectors.row(live[a]);
        gram_ = live_vecs * live_vecs.transpose();
    }

    const SdpObjectiveReport obj = sdp_objective(inst, s);
    epsilon_ = obj.epsilon;
    edge_costs_ = obj.edge_costs;

    lambda2_ = laplacian_lambda2(inst.graph);
    if (inst.graph.n <= 24) {
        h_certified_ = edge_expansion_exact(inst.graph);
        h_exact_ = true;
    } else {
        h_certified_ = std::max(lambda2_, 0.0);
        h_exact_ = false;
    }

    // Full sigma table over vertex pairs: forward (v-label -> w-label) and
    // reverse, with the two well-definedness checks. Parallel over v.
    const std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    sigma_table_.assign(pairs * k_, -1);
    sigma_rev_.assign(pairs * k_, -1);
    const double four_r = 4.0 * R;
    std::exception_ptr sigma_error;
    std::mutex sigma_mutex;
    parallel_chunks(n_, [&](std::int64_t lo, std::int64_t hi, int) {
        try {
            for (int v = static_cast<int>(lo); v < hi; ++v) {
                for (int w = v + 1; w < n_; ++w) {
                    const std::size_t off = pair_offset(v, w);
                    for (int p = 0; p < k_; ++p) {
                        const int a = compact_[static_cast<std::size_t>(v) * k_ + p];
                        if (a < 0) continue;
                        for (int q = 0; q < k_; ++q) {
                            const int b = compact_[static_cast<std::size_t>(w) * k_ + q];
                            if (b < 0) continue;
                            const double dist =
                                gram_(a, a) + gram_(b, b) - 2.0 * gram_(a, b);
                            if (dist > four_r) continue;
                            if (sigma_table_[off + p] != -1)
                                throw numeric_error(
                                    "rounding: sigma double image at pair (" +
                                    std::to_string(v) + "," + std::to_string(w) +
                                    "); normalization violated");
                            if (sigma_rev_[off + q] != -1)
                                throw numeric_error(
                                    "rounding: sigma not injective at pair (" +
                                    std::to_string(v) + "," + std::to_string(w) +
                                    "); normalization violated");
                            sigma_table_[off + p] = q;
                            sigma_rev_[off + q] = p;
                        }
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(sigma_mutex);
            if (!sigma_error) sigma_error = std::current_exception();
        }
    });
    if (sigma_error) std::rethrow_exception(sigma_error);
}

namespace {

// Core evaluation once (u, i, t, r) are fixed; shared by the Monte-Carlo and
// derandomized paths. rng is used only for random fallback labels and may be
// null when fallback is fixed-0.
RoundingOutcome evaluate_point(const RoundingContext& ctx, int u, int i, double t, double r,
                               RoundingParams::Fallback fallback, Rng* rng) {
    const int n = ctx.n(), k = ctx.k();
    const NormalizedSolution& ns = ctx.normalized();

    RoundingOutcome out;
    out.initial_vertex = u;
    out.initial_state = i;
    out.t = t;
    out.r = r;
    out.s_sizes.assign(n, 0);
    out.in_x.assign(n, 0);
    out.assignment.labels.assign(n, -1);

    for (int v = 0; v < n; ++v) {
        int member = -1;
        for (int p = 0; p < k; ++p) {
            if (ns.zero(v, p)) continue;
            if (ctx.sq_norm(v, p) < t) continue;
            if (ctx.norm_dist2(v, p, u, i) > r) continue;
            if (member != -1)
                throw numeric_error("rounding: |S_v| > 1 at vertex " + std::to_string(v) +
                                    " (hard invariant violated)");
            member = p;
        }
        if (member != -1) {
            out.s_sizes[v] = 1;
            out.in_x[v] = 1;
            out.assignment.labels[v] = member;
            ++out.x_size;
        }
    }
    // Fallback labels for undecided vertices, in vertex order.
    for (int v = 0; v < n; ++v) {
        if (out.in_x[v]) continue;
        out.assignment.labels[v] =
            (fallback == RoundingParams::Fallback::random && rng != nullptr)
                ? static_cast<int>(rng->bounded(k))
                : 0;
    }

    // Hard invariant: decided labels are pairwise sigma-consistent.
    for (int v = 0; v < n; ++v) {
        if (!out.in_x[v]) continue;
        for (int w = v + 1; w < n; ++w) {
            if (!out.in_x[w]) continue;
            if (ctx.sigma_lookup(v, out.assignment.labels[v], w) != out.assignment.labels[w])
                throw numeric_error("rounding: decided labels at vertices " + std::to_string(v) +
                                    " and " + std::to_string(w) +
                                    " are not sigma-consistent (hard invariant violated)");
        }
    }

    const UGInstance& inst = ctx.inst();
    std::int64_t sat = 0;
    for (std::size_t e = 0; e < inst.graph.edges.size(); ++e) {
        const auto [a, b] = inst.graph.edges[e];
        if (inst.perms[e][out.assignment.labels[a]] == out.assignment.labels[b]) ++sat;
        if (out.in_x[a] != out.in_x[b]) ++out.cut_edges;
    }
    out.satisfied = static_cast<double>(sat) / static_cast<double>(inst.graph.num_edges());
    out.failed = static_cast<double>(out.x_size) <= ctx.fail_threshold();
    return out;
}

RoundingOutcome sample_and_evaluate(const RoundingContext& ctx, const RoundingParams& p,
                                    std::uint64_t trial_seed, int forced_u) {
    Rng rng(trial_seed);
    const int n = ctx.n(), k = ctx.k();
    const int u = (forced_u >= 0) ? forced_u : static_cast<int>(rng.bounded(n));

    double total = 0.0;
    for (int i = 0; i < k; ++i)
        if (!ctx.normalized().zero(u, i)) total += ctx.sq_norm(u, i);
    if (total <= 0.5)
        throw input_error("rounding: initial vertex " + std::to_string(u) +
                          " has degenerate label norms (sum " + fmt_g17(total) + ")");

    // i with probability ||u_i||^2 / total.
    const double x = rng.unit() * total;
    int state = -1;
    double cum = 0.0;
    for (int i = 0; i < k; ++i) {
        if (ctx.normalized().zero(u, i)) continue;
        cum += ctx.sq_norm(u, i);
        state = i;
        if (x < cum) break;
    }

    const double t = rng.unit() * ctx.sq_norm(u, state);
    const double r = p.R * (1.0 + rng.unit());
    return evaluate_point(ctx, u, state, t, r, p.fallback, &rng);
}

void check_params(const RoundingContext& ctx, const RoundingParams& p) {
    if (p.R <= 0.0 || p.R >= 0.25) throw input_error("rounding: R must lie in (0, 1/4)");
    if (p.R != ctx.R())
        throw input_error("rounding: params.R differs from the context's R");
}

// Prefer higher satisfied fraction; break ties toward the earlier trial.
bool better_outcome(const RoundingOutcome& a, const RoundingOutcome& b) {
    if (a.satisfied != b.satisfied) return a.satisfied > b.satisfied;
    return a.trial < b.trial;
}

}  // namespace

RoundingOutcome round_once_impl(const RoundingContext& ctx, const RoundingParams& p,
                                std::uint64_t trial_seed, int forced_u) {
    check_params(ctx, p);
    return sample_and_evaluate(ctx, p, trial_seed, forced_u);
}

RoundingOutcome round_once(const RoundingContext& ctx, const RoundingParams& p,
                           std::uint64_t trial_seed) {
    return round_once_impl(ctx, p, trial_seed, -1);
}

RoundingOutcome round_once(const UGInstance& inst, const SdpSolution& s,
                           const NormalizedSolution& ns, const RoundingParams& p,
                           std::uint64_t trial_seed) {
    RoundingContext ctx(inst, s, ns, p.R);
    return round_once(ctx, p, trial_seed);
}

RoundingOutcome round_best_of(const RoundingContext& ctx, const RoundingParams& p) {
    check_params(ctx, p);
    if (p.trials < 1) throw input_error("round_best_of: trials must be >= 1");

    struct WorkerBest {
        bool has_ok = false, has_any = false;
        RoundingOutcome ok, any;
    };
    std::vector<WorkerBest> best(std::max(1, thread_count()) + 1);
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_chunks(p.trials, [&](std::int64_t lo, std::int64_t hi, int w) {
        try {
            WorkerBest local;
            for (std::int64_t trial = lo; trial < hi; ++trial) {
                RoundingOutcome out =
                    sample_and_evaluate(ctx, p, derive_seed(p.seed, trial), -1);
                out.trial = trial;
                if (!local.has_any || better_outcome(out, local.any)) {
                    local.any = out;
                    local.has_any = true;
                }
                if (!out.failed && (!local.has_ok || better_outcome(out, local.ok))) {
                    local.ok = out;
                    local.has_ok = true;
                }
            }
            best[static_cast<std::size_t>(w)] = std::move(local);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);

    WorkerBest merged;
    for (WorkerBest& b : best) {
        if (b.has_any && (!merged.has_any || better_outcome(b.any, merged.any))) {
            merged.any = b.any;
            merged.has_any = true;
        }
        if (b.has_ok && (!merged.has_ok || better_outcome(b.ok, merged.ok))) {
            merged.ok = b.ok;
            merged.has_ok = true;
        }
    }
    if (merged.has_ok) return merged.ok;
    if (merged.has_any) return merged.any;
    throw numeric_error("round_best_of: no trial produced an outcome");
}

RoundingOutcome round_best_of(const UGInstance& inst, const SdpSolution& s,
                              const NormalizedSolution& ns, const RoundingParams& p) {
    RoundingContext ctx(inst, s, ns, p.R);
    return round_best_of(ctx, p);
}

RoundingOutcome round_derandomized(const RoundingContext& ctx, const RoundingParams& p) {
    check_params(ctx, p);
    const int n = ctx.n(), k = ctx.k();
    if (static_cast<std::int64_t>(n) * k > 2000)
        throw size_error("round_derandomized: n*k > 2000; use round_best_of");

    // Distinct squared norms over live labels (plus 0) are the only points
    // where the threshold predicate can change.
    std::vector<double> all_norms;
    all_norms.push_back(0.0);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i)
            if (!ctx.normalized().zero(v, i)) all_norms.push_back(ctx.sq_norm(v, i));
    std::sort(all_norms.begin(), all_norms.end());
    all_norms.erase(std::unique(all_norms.begin(), all_norms.end()), all_norms.end());

    bool have_best = false;
    RoundingOutcome best;
    std::int64_t combo = 0;
    std::vector<double> radii;
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < k; ++i) {
            if (ctx.normalized().zero(u, i)) continue;
            const double cap = ctx.sq_norm(u, i);

            radii.clear();
            radii.push_back(p.R);
            radii.push_back(2.0 * p.R);
            for (int v = 0; v < n; ++v)
                for (int q = 0; q < k; ++q) {
                    if (ctx.normalized().zero(v, q)) continue;
                    const double dist = ctx.norm_dist2(v, q, u, i);
                    if (dist >= p.R && dist <= 2.0 * p.R) radii.push_back(dist);
                }
            std::sort(radii.begin(), radii.end());
            radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

            for (double t : all_norms) {
                if (t > cap) break;
                for (double r : radii) {
                    RoundingOutcome out =
                        evaluate_point(ctx, u, i, t, r, RoundingParams::Fallback::fixed0,
                                       nullptr);
                    out.trial = combo++;
                    if (!have_best || out.satisfied > best.satisfied) {
                        best = std::move(out);
                        have_best = true;
                    }
                }
            }
        }
    }
    if (!have_best)
        throw numeric_error("round_derandomized: no live (vertex, label) to enumerate");
    return best;
}

RoundingOutcome round_derandomized(const UGInstance& inst, const SdpSolution& s,
                                   const NormalizedSolution& ns, const RoundingParams& p) {
    RoundingContext ctx(inst, s, ns, p.R);
    return round_derandomized(ctx, p);
}

namespace {

struct MonitorAccum {
    std::vector<std::int64_t> member_fixed, member_avg;
    std::vector<std::int64_t> viol_edge;
    std::int64_t sum_x = 0, sum_x2 = 0;
    std::int64_t count_gt_n8 = 0;
    std::int64_t sum_cut = 0, sum_cut2 = 0;
    std::int64_t count_large = 0;
    std::int64_t sum_viol = 0, sum_viol2 = 0;
    std::int64_t sum_viol_large = 0, sum_viol_large2 = 0;

    void init(std::size_t nk, std::size_t edges) {
        member_fixed.assign(nk, 0);
        member_avg.assign(nk, 0);
        viol_edge.assign(edges, 0);
    }
    void merge(const MonitorAccum& o) {
        for (std::size_t i = 0; i < member_fixed.size(); ++i) {
            member_fixed[i] += o.member_fixed[i];
            member_avg[i] += o.member_avg[i];
        }
        for (std::size_t i = 0; i < viol_edge.size(); ++i) viol_edge[i] += o.viol_edge[i];
        sum_x += o.sum_x;
        sum_x2 += o.sum_x2;
        count_gt_n8 += o.count_gt_n8;
        sum_cut += o.sum_cut;
        sum_cut2 += o.sum_cut2;
        count_large += o.count_large;
        sum_viol += o.sum_viol;
        sum_viol2 += o.sum_viol2;
        sum_viol_large += o.sum_viol_large;
        sum_viol_large2 += o.sum_viol_large2;
    }
};

// Absolute slack absorbing floating-point error in the bounds themselves
// (e.g. a squared norm that is mathematically 1 but computed as 1 - 1 ulp,
// turning an exactly-tight frequency into a 2e-16 "violation"). Far below
// the statistical resolution of any realistic trial count.
constexpr double kRoundoffGuard = 1e-12;

double binom_se(double freq, double trials) {
    return std::sqrt(std::max(freq * (1.0 - freq), 0.0) / trials);
}

// Standard error of the mean from integer sums of x and x^2.
double mean_se(std::int64_t s1, std::int64_t s2, double t) {
    if (t <= 1.5) return 0.0;
    const double var =
        std::max(0.0, (static_cast<double>(s2) - static_cast<double>(s1) *
                                                     static_cast<double>(s1) / t) /
                          (t - 1.0));
    return std::sqrt(var / t);
}

}  // namespace

MonitorReport lemma_monitors(const RoundingContext& ctx, const RoundingParams& p,
                             std::int64_t trials, int fixed_u) {
    check_params(ctx, p);
    if (trials < 1) throw input_error("lemma_monitors: trials must be >= 1");
    if (fixed_u < 0 || fixed_u >= ctx.n())
        throw input_error("lemma_monitors: fixed vertex out of range");

    const int n = ctx.n(), k = ctx.k();
    const std::size_t nk = static_cast<std::size_t>(n) * k;
    const std::size_t n_edges = ctx.inst().graph.edges.size();
    const double fail_threshold = ctx.fail_threshold();

    const std::uint64_t seed_fixed = derive_seed(p.seed, 1);
    const std::uint64_t seed_free = derive_seed(p.seed, 2);

    std::vector<MonitorAccum> acc(std::max(1, thread_count()) + 1);
    for (auto& a : acc) a.init(nk, n_edges);
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_chunks(trials, [&](std::int64_t lo, std::int64_t hi, int w) {
        try {
            MonitorAccum& a = acc[static_cast<std::size_t>(w)];
            for (std::int64_t trial = lo; trial < hi; ++trial) {
                // Fixed-initial-vertex trial: only membership counts.
                {
                    const RoundingOutcome out = sample_and_evaluate(
                        ctx, p, derive_seed(seed_fixed, trial), fixed_u);
                    for (int v = 0; v < n; ++v)
                        if (out.in_x[v])
                            ++a.member_fixed[static_cast<std::size_t>(v) * k +
                                             out.assignment.labels[v]];
                }
                // Unconstrained trial: everything else.
                const RoundingOutcome out =
                    sample_and_evaluate(ctx, p, derive_seed(seed_free, trial), -1);
                for (int v = 0; v < n; ++v)
                    if (out.in_x[v])
                        ++a.member_avg[static_cast<std::size_t>(v) * k +
                                       out.assignment.labels[v]];
                a.sum_x += out.x_size;
                a.sum_x2 += out.x_size * out.x_size;
                if (out.x_size * 8 > n) ++a.count_gt_n8;
                a.sum_cut += out.cut_edges;
                a.sum_cut2 += out.cut_edges * out.cut_edges;
                const bool large = static_cast<double>(out.x_size) >= fail_threshold;
                if (large) ++a.count_large;
                std::int64_t viol = 0;
                const UGInstance& inst = ctx.inst();
                for (std::size_t e = 0; e < n_edges; ++e) {
                    const auto [x, y] = inst.graph.edges[e];
                    if (!out.in_x[x] || !out.in_x[y]) continue;
                    if (inst.perms[e][out.assignment.labels[x]] != out.assignment.labels[y]) {
                        ++viol;
                        ++a.viol_edge[e];
                    }
                }
                a.sum_viol += viol;
                a.sum_viol2 += viol * viol;
                if (large) {
                    a.sum_viol_large += viol;
                    a.sum_viol_large2 += viol * viol;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    });
    if (err) std::rethrow_exception(err);

    MonitorAccum total;
    total.init(nk, n_edges);
    for (const auto& a : acc) total.merge(a);

    const double t_d = static_cast<double>(trials);
    MonitorReport rep;
    rep.trials = trials;
    rep.fixed_vertex = fixed_u;

    // Membership frequency vs squared-norm bound; report the worst (v,p).
    const auto membership_row = [&](const char* name,
                                    const std::vector<std::int64_t>& counts) {
        MonitorRow row;
        row.name = name;
        row.pass = true;
        double worst_margin = -std::numeric_limits<double>::infinity();
        for (std::size_t idx = 0; idx < nk; ++idx) {
            const double freq = static_cast<double>(counts[idx]) / t_d;
            const double se = binom_se(freq, t_d);
            const double bound = ctx.sq_norm(static_cast<int>(idx) / k,
                                             static_cast<int>(idx) % k);
            const double margin = freq - bound - 3.0 * se;
            if (margin > worst_margin) {
                worst_margin = margin;
                row.estimate = freq;
                row.stderr_value = se;
                row.bound = bound;
            }
            if (margin > kRoundoffGuard) row.pass = false;
        }
        rep.rows.push_back(row);
    };
    membership_row("probui_fixed_worst", total.member_fixed);
    membership_row("probui_avg_worst", total.member_avg);

    {
        MonitorRow row;
        row.name = "quart_mean_x";
        row.estimate = static_cast<double>(total.sum_x) / t_d / n;
        row.stderr_value = mean_se(total.sum_x, total.sum_x2, t_d) / n;
        row.bound = 0.25;
        row.pass = row.estimate >= row.bound - 3.0 * row.stderr_value - kRoundoffGuard;
        rep.rows.push_back(row);
    }
    {
        MonitorRow row;
        row.name = "quart_prob_gt_eighth";
        row.estimate = static_cast<double>(total.count_gt_n8) / t_d;
        row.stderr_value = binom_se(row.estimate, t_d);
        row.bound = 0.125;
        row.pass = row.estimate > row.bound - 3.0 * row.stderr_value - kRoundoffGuard;
        rep.rows.push_back(row);
    }
    {
        MonitorRow row;
        row.name = "expcut_mean_fraction";
        row.estimate = static_cast<double>(total.sum_cut) / t_d / static_cast<double>(n_edges);
        row.stderr_value =
            mean_se(total.sum_cut, total.sum_cut2, t_d) / static_cast<double>(n_edges);
        row.bound = 6.0 * ctx.epsilon() / ctx.R();
        row.pass = row.estimate <= row.bound + 3.0 * row.stderr_value + kRoundoffGuard;
        rep.rows.push_back(row);
    }
    {
        MonitorRow row;
        row.name = "largex_prob";
        row.estimate = static_cast<double>(total.count_large) / t_d;
        row.stderr_value = binom_se(row.estimate, t_d);
        row.bound = 1.0 / 16.0;
        row.pass = row.estimate >= row.bound - 3.0 * row.stderr_value - kRoundoffGuard;
        rep.rows.push_back(row);
    }
    {
        // Worst edge for Pr[violated and both endpoints decided] <= 4 eps_vw.
        MonitorRow row;
        row.name = "epsuv_worst_edge";
        row.pass = true;
        double worst_margin = -std::numeric_limits<double>::infinity();
        for (std::size_t e = 0; e < n_edges; ++e) {
            const double freq = static_cast<double>(total.viol_edge[e]) / t_d;
            const double se = binom_se(freq, t_d);
            const double bound = 4.0 * ctx.edge_costs()[e];
            const double margin = freq - bound - 3.0 * se;
            if (margin > worst_margin) {
                worst_margin = margin;
                row.estimate = freq;
                row.stderr_value = se;
                row.bound = bound;
            }
            if (margin > kRoundoffGuard) row.pass = false;
        }
        if (n_edges == 0) row.pass = true;
        rep.rows.push_back(row);
    }
    {
        MonitorRow row;
        row.name = "violx_frac_mean";
        row.estimate =
            static_cast<double>(total.sum_viol) / t_d / static_cast<double>(n_edges);
        row.stderr_value =
            mean_se(total.sum_viol, total.sum_viol2, t_d) / static_cast<double>(n_edges);
        row.bound = 4.0 * ctx.epsilon();
        row.pass = row.estimate <= row.bound + 3.0 * row.stderr_value + kRoundoffGuard;
        rep.rows.push_back(row);
    }
    {
        MonitorRow row;
        row.name = "violx_frac_given_largex";
        const double cl = static_cast<double>(total.count_large);
        if (total.count_large > 0) {
            row.estimate = static_cast<double>(total.sum_viol_large) / cl /
                           static_cast<double>(n_edges);
            row.stderr_value = mean_se(total.sum_viol_large, total.sum_viol_large2, cl) /
                               static_cast<double>(n_edges);
        }
        row.bound = 64.0 * ctx.epsilon();
        row.pass = row.estimate <= row.bound + 3.0 * row.stderr_value + kRoundoffGuard;
        rep.rows.push_back(row);
    }
    return rep;
}

MonitorReport lemma_monitors(const UGInstance& inst, const SdpSolution& s,
                             const NormalizedSolution& ns, const RoundingParams& p,
                             std::int64_t trials, int fixed_u) {
    RoundingContext ctx(inst, s, ns, p.R);
    return lemma_monitors(ctx, p, trials, fixed_u);
}

std::string outcome_to_json(const RoundingOutcome& o) {
    std::string out = "{\n  \"assignment\": [";
    for (std::size_t v = 0; v < o.assignment.labels.size(); ++v) {
        out += std::to_string(o.assignment.labels[v]);
        if (v + 1 < o.assignment.labels.size()) out += ", ";
    }
    out += "],\n";
    out += "  \"satisfied\": " + fmt_g17(o.satisfied) + ",\n";
    out += "  \"x_size\": " + std::to_string(o.x_size) + ",\n";
    out += "  \"cut_edges\": " + std::to_string(o.cut_edges) + ",\n";
    out += std::string("  \"failed\": ") + (o.failed ? "true" : "false") + ",\n";
    out += "  \"initial\": {\"u\": " + std::to_string(o.initial_vertex) +
           ", \"i\": " + std::to_string(o.initial_state) + ", \"t\": " + fmt_g17(o.t) +
           ", \"r\": " + fmt_g17(o.r) + "}\n";
    out += "}\n";
    return out;
}

std::string monitor_report_to_csv(const MonitorReport& rep) {
    std::string out = "name,estimate,stderr,bound,pass\n";
    for (const MonitorRow& row : rep.rows) {
        out += row.name + "," + fmt_g17(row.estimate) + "," + fmt_g17(row.stderr_value) + "," +
               fmt_g17(row.bound) + "," + (row.pass ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace ugx
