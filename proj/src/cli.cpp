#include "ugx/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ugx/emd.hpp"
#include "ugx/errors.hpp"
#include "ugx/graph.hpp"
#include "ugx/instance.hpp"
#include "ugx/json_util.hpp"
#include "ugx/normalize.hpp"
#include "ugx/oracle.hpp"
#include "ugx/random.hpp"
#include "ugx/rounding.hpp"
#include "ugx/sdp.hpp"
#include "ugx/spectral.hpp"

namespace ugx {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

// ---- gen -----------------------------------------------------------------

struct GenOpts {
    int n = 20, d = 4, k = 3;
    double noise = 0.0;
    std::uint64_t seed = 0;
    double mix_weight = 1.0;
    std::string out_dir = ".";
};

SdpSolution build_mixture(const UGInstance& inst, const Assignment& plant, double mix_weight,
                          std::uint64_t random_seed) {
    SdpSolution plant_sdp = integral_solution(inst, plant);
    if (mix_weight >= 1.0) return plant_sdp;
    Rng rng(random_seed);
    Assignment other;
    other.labels.resize(inst.graph.n);
    for (int v = 0; v < inst.graph.n; ++v)
        other.labels[v] = static_cast<int>(rng.bounded(inst.k));
    return mix_solutions({{std::move(plant_sdp), mix_weight},
                          {integral_solution(inst, other), 1.0 - mix_weight}});
}

int cmd_gen(const GenOpts& o) {
    if (o.mix_weight <= 0.0 || o.mix_weight > 1.0)
        throw input_error("gen: --mix-weight must lie in (0, 1]");
    const Graph g = gen_random_regular(o.n, o.d, o.seed);
    auto [inst, plant] = gen_planted(g, o.k, o.noise, derive_seed(o.seed, 1));
    const SdpSolution sdp = build_mixture(inst, plant, o.mix_weight, derive_seed(o.seed, 2));

    fs::create_directories(o.out_dir);
    const fs::path dir(o.out_dir);
    write_text_file((dir / "graph.json").string(), graph_to_json(g).dump(2) + "\n");
    write_text_file((dir / "instance.json").string(), serialize_instance(inst));
    write_text_file((dir / "plant.json").string(), serialize_assignment(plant));
    write_text_file((dir / "sdp.json").string(), serialize_sdp(sdp));
    std::cout << "wrote " << (dir / "graph.json").string() << ", instance.json, plant.json, "
              << "sdp.json (n=" << o.n << ", d=" << o.d << ", k=" << o.k
              << ", noise=" << fmt_g17(o.noise) << ", mix_weight=" << fmt_g17(o.mix_weight)
              << ")\n";
    return 0;
}

// ---- spectral ------------------------------------------------------------

std::string spectral_report_json(const SpectralReport& r) {
    std::string out = "{\n";
    out += "  \"lambda2\": " + fmt_g17(r.lambda2) + ",\n";
    out += "  \"h_is_exact\": " + bool_json(r.h_is_exact) + ",\n";
    out += "  \"h\": " + (r.h_is_exact ? fmt_g17(r.h) : std::string("null")) + ",\n";
    out += "  \"h_lower\": " + fmt_g17(r.h_lower) + ",\n";
    out += "  \"h_upper\": " + fmt_g17(r.h_upper) + ",\n";
    out += "  \"cheeger_lower\": " +
           (r.h_is_exact ? fmt_g17(r.cheeger_lower) : std::string("null")) + ",\n";
    out += "  \"cheeger_upper\": " +
           (r.h_is_exact ? fmt_g17(r.cheeger_upper) : std::string("null")) + ",\n";
    out += "  \"cheeger_ok\": " + bool_json(r.cheeger_ok) + "\n";
    out += "}\n";
    return out;
}

int cmd_spectral(const std::string& graph_path, const std::string& out_path) {
    const Graph g = graph_from_json(load_json_file(graph_path));
    const SpectralReport rep = spectral_report(g);
    emit(spectral_report_json(rep), out_path);
    if (!out_path.empty())
        std::cout << "lambda2=" << fmt_g17(rep.lambda2) << " h="
                  << (rep.h_is_exact ? fmt_g17(rep.h)
                                     : "[" + fmt_g17(rep.h_lower) + ", " +
                                           fmt_g17(rep.h_upper) + "]")
                  << "\n";
    if (!rep.cheeger_ok) throw numeric_error("spectral: Cheeger audit failed");
    return 0;
}

// ---- verify-sdp ----------------------------------------------------------

std::string feasibility_json(const FeasibilityReport& r) {
    std::string out = "{\n";
    out += "  \"tol\": " + fmt_g17(r.tol) + ",\n";
    out += "  \"orthogonality\": " + fmt_g17(r.orthogonality) + ",\n";
    out += "  \"norm_sum\": " + fmt_g17(r.norm_sum) + ",\n";
    out += "  \"triangle\": " + fmt_g17(r.triangle) + ",\n";
    out += "  \"dist_upper\": " + fmt_g17(r.dist_upper) + ",\n";
    out += "  \"norm_lower\": " + fmt_g17(r.norm_lower) + ",\n";
    out += "  \"triples_checked\": " + std::to_string(r.triples_checked) + ",\n";
    out += "  \"triples_exhaustive\": " + bool_json(r.triples_exhaustive) + ",\n";
    out += "  \"pass\": " + bool_json(r.pass()) + "\n";
    out += "}\n";
    return out;
}

struct VerifyOpts {
    std::string sdp_path, instance_path, out_path;
    double tol = 1e-9;
    std::int64_t triple_budget = 100000;
};

int cmd_verify_sdp(const VerifyOpts& o) {
    const SdpSolution s = parse_sdp(read_file(o.sdp_path));
    UGInstance inst;
    const Graph* graph = nullptr;
    if (!o.instance_path.empty()) {
        inst = parse_instance(read_file(o.instance_path));
        validate(inst, s);
        graph = &inst.graph;
    }
    const FeasibilityReport rep = verify_feasibility(s, o.tol, o.triple_budget, graph);
    emit(feasibility_json(rep), o.out_path);
    if (!rep.pass())
        throw numeric_error("verify-sdp: max violation " + fmt_g17(rep.max_violation()) +
                            " exceeds tol " + fmt_g17(rep.tol));
    return 0;
}

// ---- normalize -----------------------------------------------------------

struct NormalizeOpts {
    std::string sdp_path, instance_path, out_path;
    double zero_tol = 1e-12;
    double psd_tol = 1e-8;
    double verify_tol = 1e-8;
    std::int64_t triple_budget = 100000;
};

std::string normalization_json(const NormalizationReport& r) {
    std::string out = "{\n";
    out += "  \"tol\": " + fmt_g17(r.tol) + ",\n";
    out += "  \"triangle\": " + fmt_g17(r.triangle) + ",\n";
    out += "  \"inner_law\": " + fmt_g17(r.inner_law) + ",\n";
    out += "  \"unit_norm\": " + fmt_g17(r.unit_norm) + ",\n";
    out += "  \"orthogonality\": " + fmt_g17(r.orthogonality) + ",\n";
    out += "  \"factor2\": " + fmt_g17(r.factor2) + ",\n";
    out += "  \"triples_checked\": " + std::to_string(r.triples_checked) + ",\n";
    out += "  \"triples_exhaustive\": " + bool_json(r.triples_exhaustive) + ",\n";
    out += "  \"pass\": " + bool_json(r.pass()) + "\n";
    out += "}\n";
    return out;
}

int cmd_normalize(const NormalizeOpts& o) {
    const SdpSolution s = parse_sdp(read_file(o.sdp_path));
    UGInstance inst;
    const Graph* graph = nullptr;
    if (!o.instance_path.empty()) {
        inst = parse_instance(read_file(o.instance_path));
        validate(inst, s);
        graph = &inst.graph;
    }
    const FeasibilityReport feas = verify_feasibility(s, 1e-9, o.triple_budget, graph);
    if (!feas.pass())
        throw numeric_error("normalize: input solution infeasible (max violation " +
                            fmt_g17(feas.max_violation()) + " at tol 1e-9)");
    const NormalizedSolution ns = normalize(s, o.zero_tol, o.psd_tol);
    const NormalizationReport rep =
        verify_normalization(s, ns, o.verify_tol, o.triple_budget, graph);
    write_text_file(o.out_path, serialize_normalized(ns));
    std::cout << normalization_json(rep);
    if (!rep.pass())
        throw numeric_error("normalize: property verification failed (max violation " +
                            fmt_g17(rep.max_violation()) + ")");
    return 0;
}

// ---- emd -----------------------------------------------------------------

struct EmdOpts {
    std::string sdp_path, out_path, csv_path;
    std::string mode = "exact";
    std::int64_t pairs = 20000;
    std::uint64_t seed = 0;
};

int cmd_emd(const EmdOpts& o) {
    const SdpSolution s = parse_sdp(read_file(o.sdp_path));
    const bool exact = (o.mode == "exact");
    if (!exact && o.mode != "sampled") throw input_error("emd: --mode must be exact or sampled");
    const AvgEmdReport rep = avg_emd(s, exact, o.pairs, o.seed);
    std::string out = "{\n";
    out += "  \"value\": " + fmt_g17(rep.value) + ",\n";
    out += "  \"stderr\": " + fmt_g17(rep.stderr_value) + ",\n";
    out += "  \"exact\": " + bool_json(rep.exact) + ",\n";
    out += "  \"pairs\": " + std::to_string(rep.pairs) + "\n";
    out += "}\n";
    emit(out, o.out_path);
    if (!o.csv_path.empty()) {
        if (!exact) throw input_error("emd: --csv requires --mode exact");
        std::string csv = "u,v,emd\n";
        for (int u = 0; u < s.n; ++u)
            for (int v = u; v < s.n; ++v) {
                const double d = (u == v) ? 0.0 : emd_pair(s, u, v).value;
                csv += std::to_string(u) + "," + std::to_string(v) + "," + fmt_g17(d) + "\n";
            }
        write_text_file(o.csv_path, csv);
    }
    return 0;
}

// ---- round ---------------------------------------------------------------

struct RoundOpts {
    std::string instance_path, sdp_path, out_path;
    std::string mode = "mc";
    std::string fallback = "random";
    double R = 0.2;
    std::int64_t trials = 64;
    std::uint64_t seed = 0;
    double zero_tol = 1e-12;
    double psd_tol = 1e-8;
};

struct PreparedInput {
    UGInstance inst;
    SdpSolution sdp;
    NormalizedSolution ns;
};

PreparedInput prepare_input(const std::string& instance_path, const std::string& sdp_path,
                            double zero_tol, double psd_tol) {
    PreparedInput in;
    in.inst = parse_instance(read_file(instance_path));
    in.sdp = parse_sdp(read_file(sdp_path));
    validate(in.inst, in.sdp);
    const FeasibilityReport feas =
        verify_feasibility(in.sdp, 1e-9, 100000, &in.inst.graph);
    if (!feas.pass())
        throw numeric_error("input SDP solution infeasible (max violation " +
                            fmt_g17(feas.max_violation()) + " at tol 1e-9)");
    in.ns = normalize(in.sdp, zero_tol, psd_tol);
    return in;
}

int cmd_round(const RoundOpts& o) {
    if (o.R <= 0.0 || o.R >= 0.25) throw input_error("round: --R must lie in (0, 1/4)");
    RoundingParams params;
    params.R = o.R;
    params.seed = o.seed;
    params.trials = o.trials;
    if (o.fallback == "random") {
        params.fallback = RoundingParams::Fallback::random;
    } else if (o.fallback == "fixed0") {
        params.fallback = RoundingParams::Fallback::fixed0;
    } else {
        throw input_error("round: --fallback must be random or fixed0");
    }

    const PreparedInput in = prepare_input(o.instance_path, o.sdp_path, o.zero_tol, o.psd_tol);
    RoundingContext ctx(in.inst, in.sdp, in.ns, params.R);
    RoundingOutcome out;
    if (o.mode == "mc") {
        out = round_best_of(ctx, params);
    } else if (o.mode == "derand") {
        out = round_derandomized(ctx, params);
    } else {
        throw input_error("round: --mode must be mc or derand");
    }
    emit(outcome_to_json(out), o.out_path);
    return out.failed ? 3 : 0;
}

// ---- monitor -------------------------------------------------------------

struct MonitorOpts {
    std::string instance_path, sdp_path, out_path;
    double R = 0.2;
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    int fixed_u = 0;
    double zero_tol = 1e-12;
    double psd_tol = 1e-8;
};

int cmd_monitor(const MonitorOpts& o) {
    if (o.R <= 0.0 || o.R >= 0.25) throw input_error("monitor: --R must lie in (0, 1/4)");
    RoundingParams params;
    params.R = o.R;
    params.seed = o.seed;
    const PreparedInput in = prepare_input(o.instance_path, o.sdp_path, o.zero_tol, o.psd_tol);
    RoundingContext ctx(in.inst, in.sdp, in.ns, params.R);
    const MonitorReport rep = lemma_monitors(ctx, params, o.trials, o.fixed_u);
    emit(monitor_report_to_csv(rep), o.out_path);
    if (!rep.all_pass())
        throw numeric_error("monitor: at least one lemma monitor failed its bound");
    return 0;
}

// ---- brute ---------------------------------------------------------------

int cmd_brute(const std::string& instance_path, std::int64_t budget,
              const std::string& out_path) {
    const UGInstance inst = parse_instance(read_file(instance_path));
    const OracleResult res = brute_force_opt(inst, budget);
    std::string out = "{\n  \"labels\": [";
    for (std::size_t v = 0; v < res.best.labels.size(); ++v) {
        out += std::to_string(res.best.labels[v]);
        if (v + 1 < res.best.labels.size()) out += ", ";
    }
    out += "],\n";
    out += "  \"value\": " + fmt_g17(res.value) + ",\n";
    out += "  \"enumerated\": " + std::to_string(res.enumerated) + "\n";
    out += "}\n";
    emit(out, out_path);
    return 0;
}

// ---- experiment ----------------------------------------------------------

struct ExperimentOpts {
    int n = 200, d = 8, k = 5;
    std::string noise_grid = "0.05";
    double R = 0.2;
    double mix_weight = 0.95;
    std::int64_t trials = 64;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

int cmd_experiment(const ExperimentOpts& o) {
    if (o.R <= 0.0 || o.R >= 0.25) throw input_error("experiment: --R must lie in (0, 1/4)");
    if (o.trials < 1) throw input_error("experiment: --trials must be >= 1");
    if (o.mix_weight <= 0.0 || o.mix_weight > 1.0)
        throw input_error("experiment: --mix-weight must lie in (0, 1]");
    std::vector<double> noises;
    {
        std::stringstream ss(o.noise_grid);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                std::size_t pos = 0;
                const double v = std::stod(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                noises.push_back(v);
            } catch (const std::exception&) {
                throw input_error("experiment: bad noise value \"" + tok + "\"");
            }
        }
    }
    if (noises.empty()) throw input_error("experiment: empty noise grid");
    for (double nz : noises)
        if (nz < 0.0 || nz > 1.0) throw input_error("experiment: noise values must be in [0, 1]");

    fs::create_directories(o.out_dir);
    std::string csv = "n,d,k,noise,eps_sdp,lambda2,h,avg_emd,R,satisfied_best,bound_theorem,pass\n";
    for (std::size_t idx = 0; idx < noises.size(); ++idx) {
        const double noise = noises[idx];
        const std::uint64_t base = derive_seed(o.seed, idx);
        const Graph g = gen_random_regular(o.n, o.d, derive_seed(base, 1));
        auto [inst, plant] = gen_planted(g, o.k, noise, derive_seed(base, 2));
        const SdpSolution sdp = build_mixture(inst, plant, o.mix_weight, derive_seed(base, 3));
        const FeasibilityReport feas = verify_feasibility(sdp, 1e-9, 100000, &g);
        if (!feas.pass())
            throw numeric_error("experiment: constructed solution failed feasibility");
        const NormalizedSolution ns = normalize(sdp);
        RoundingContext ctx(inst, sdp, ns, o.R);

        const double eps = ctx.epsilon();
        const double h_col = ctx.h_certified();
        const AvgEmdReport emd_rep =
            (o.n <= 300) ? avg_emd(sdp, true)
                         : avg_emd(sdp, false, 20000, derive_seed(base, 4));

        RoundingParams params;
        params.R = o.R;
        params.seed = derive_seed(base, 5);
        params.trials = o.trials;
        const RoundingOutcome best = round_best_of(ctx, params);

        const double bound =
            (eps == 0.0) ? 1.0
                         : 1.0 - (100.0 / (h_col * o.R) + 64.0) * eps;
        const bool pass = best.satisfied >= bound;
        csv += std::to_string(o.n) + "," + std::to_string(o.d) + "," + std::to_string(o.k) +
               "," + fmt_g17(noise) + "," + fmt_g17(eps) + "," + fmt_g17(ctx.lambda2()) + "," +
               fmt_g17(h_col) + "," + fmt_g17(emd_rep.value) + "," + fmt_g17(o.R) + "," +
               fmt_g17(best.satisfied) + "," + fmt_g17(bound) + "," +
               (pass ? "true" : "false") + "\n";
    }
    const fs::path out_csv = fs::path(o.out_dir) / "results.csv";
    write_text_file(out_csv.string(), csv);
    std::cout << csv;
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Unique Games on expanders: SDP solutions, normalization, and "
                 "propagation rounding"};
    app.require_subcommand(1);

    GenOpts gen_o;
    CLI::App* sub_gen = app.add_subcommand(
        "gen", "Generate a planted instance with graph, plant, and SDP solution files");
    sub_gen->add_option("--n", gen_o.n, "vertex count");
    sub_gen->add_option("--d", gen_o.d, "degree");
    sub_gen->add_option("--k", gen_o.k, "alphabet size");
    sub_gen->add_option("--noise", gen_o.noise, "corrupted-edge fraction in [0,1]");
    sub_gen->add_option("--seed", gen_o.seed, "RNG seed");
    sub_gen->add_option("--mix-weight", gen_o.mix_weight,
                        "weight on the plant in the SDP mixture (1 = integral plant)");
    sub_gen->add_option("--out", gen_o.out_dir, "output directory");

    std::string spectral_graph, spectral_out;
    CLI::App* sub_spectral =
        app.add_subcommand("spectral", "Laplacian gap, edge expansion, Cheeger audit");
    sub_spectral->add_option("--graph", spectral_graph, "graph JSON file")->required();
    sub_spectral->add_option("--out", spectral_out, "report JSON file (default stdout)");

    VerifyOpts verify_o;
    CLI::App* sub_verify =
        app.add_subcommand("verify-sdp", "Check SDP constraints (1)-(5) of a solution file");
    sub_verify->add_option("--sdp", verify_o.sdp_path, "SDP solution JSON")->required();
    sub_verify->add_option("--instance", verify_o.instance_path,
                           "instance JSON (enables edge-local triple checks)");
    sub_verify->add_option("--tol", verify_o.tol, "violation tolerance");
    sub_verify->add_option("--triple-budget", verify_o.triple_budget,
                           "sampled triangle-inequality triples");
    sub_verify->add_option("--out", verify_o.out_path, "report JSON file (default stdout)");

    NormalizeOpts norm_o;
    CLI::App* sub_norm = app.add_subcommand(
        "normalize", "Produce the unit-vector normalization and verify its properties");
    sub_norm->add_option("--sdp", norm_o.sdp_path, "SDP solution JSON")->required();
    sub_norm->add_option("--instance", norm_o.instance_path,
                         "instance JSON (enables edge-local triple checks)");
    sub_norm->add_option("--out", norm_o.out_path, "normalized solution JSON")->required();
    sub_norm->add_option("--zero-tol", norm_o.zero_tol, "squared-norm threshold for exclusion");
    sub_norm->add_option("--psd-tol", norm_o.psd_tol, "eigenvalue clamp tolerance");
    sub_norm->add_option("--tol", norm_o.verify_tol, "property verification tolerance");
    sub_norm->add_option("--triple-budget", norm_o.triple_budget,
                         "sampled triangle-inequality triples");

    EmdOpts emd_o;
    CLI::App* sub_emd =
        app.add_subcommand("emd", "Average earthmover distance between vertex label sets");
    sub_emd->add_option("--sdp", emd_o.sdp_path, "SDP solution JSON")->required();
    sub_emd->add_option("--mode", emd_o.mode, "exact | sampled");
    sub_emd->add_option("--pairs", emd_o.pairs, "sample count in sampled mode");
    sub_emd->add_option("--seed", emd_o.seed, "RNG seed for sampled mode");
    sub_emd->add_option("--out", emd_o.out_path, "report JSON file (default stdout)");
    sub_emd->add_option("--csv", emd_o.csv_path, "per-pair CSV (exact mode only)");

    RoundOpts round_o;
    CLI::App* sub_round =
        app.add_subcommand("round", "Propagation rounding (Monte-Carlo or derandomized)");
    sub_round->add_option("--instance", round_o.instance_path, "instance JSON")->required();
    sub_round->add_option("--sdp", round_o.sdp_path, "SDP solution JSON")->required();
    sub_round->add_option("--mode", round_o.mode, "mc | derand");
    sub_round->add_option("--R", round_o.R, "radius base in (0, 1/4)");
    sub_round->add_option("--trials", round_o.trials, "Monte-Carlo trials");
    sub_round->add_option("--seed", round_o.seed, "RNG seed");
    sub_round->add_option("--fallback", round_o.fallback, "random | fixed0");
    sub_round->add_option("--out", round_o.out_path, "outcome JSON file (default stdout)");

    MonitorOpts mon_o;
    CLI::App* sub_mon =
        app.add_subcommand("monitor", "Monte-Carlo monitors for the per-lemma bounds");
    sub_mon->add_option("--instance", mon_o.instance_path, "instance JSON")->required();
    sub_mon->add_option("--sdp", mon_o.sdp_path, "SDP solution JSON")->required();
    sub_mon->add_option("--R", mon_o.R, "radius base in (0, 1/4)");
    sub_mon->add_option("--trials", mon_o.trials, "trials per monitor family");
    sub_mon->add_option("--seed", mon_o.seed, "RNG seed");
    sub_mon->add_option("--fixed-u", mon_o.fixed_u, "initial vertex for the fixed-vertex rows");
    sub_mon->add_option("--out", mon_o.out_path, "monitor CSV file (default stdout)");

    std::string brute_instance, brute_out;
    std::int64_t brute_budget = 10000000;
    CLI::App* sub_brute =
        app.add_subcommand("brute", "Exhaustive optimum over all assignments (tiny instances)");
    sub_brute->add_option("--instance", brute_instance, "instance JSON")->required();
    sub_brute->add_option("--budget", brute_budget, "max k^n assignments");
    sub_brute->add_option("--out", brute_out, "result JSON file (default stdout)");

    ExperimentOpts exp_o;
    CLI::App* sub_exp = app.add_subcommand(
        "experiment", "Planted sweep: generate, analyze, round, and emit results.csv");
    sub_exp->add_option("--n", exp_o.n, "vertex count");
    sub_exp->add_option("--d", exp_o.d, "degree");
    sub_exp->add_option("--k", exp_o.k, "alphabet size");
    sub_exp->add_option("--noise-grid", exp_o.noise_grid, "comma-separated noise values");
    sub_exp->add_option("--R", exp_o.R, "radius base in (0, 1/4)");
    sub_exp->add_option("--mix-weight", exp_o.mix_weight, "plant weight in the SDP mixture");
    sub_exp->add_option("--trials", exp_o.trials, "Monte-Carlo trials per row");
    sub_exp->add_option("--seed", exp_o.seed, "RNG seed");
    sub_exp->add_option("--out-dir", exp_o.out_dir, "output directory for results.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sub_gen->parsed()) return cmd_gen(gen_o);
        if (sub_spectral->parsed()) return cmd_spectral(spectral_graph, spectral_out);
        if (sub_verify->parsed()) return cmd_verify_sdp(verify_o);
        if (sub_norm->parsed()) return cmd_normalize(norm_o);
        if (sub_emd->parsed()) return cmd_emd(emd_o);
        if (sub_round->parsed()) return cmd_round(round_o);
        if (sub_mon->parsed()) return cmd_monitor(mon_o);
        if (sub_brute->parsed()) return cmd_brute(brute_instance, brute_budget, brute_out);
        if (sub_exp->parsed()) return cmd_experiment(exp_o);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("ugx");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace ugx
