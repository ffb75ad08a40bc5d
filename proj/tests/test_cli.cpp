#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ugx/cli.hpp"
#include "ugx/instance.hpp"
#include "ugx/json_util.hpp"
#include "ugx/normalize.hpp"
#include "ugx/sdp.hpp"

using namespace ugx;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("ugx_cli_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read_all(const std::string& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(std::vector<std::string> args) { return run_cli(args); }

}  // namespace

TEST_CASE("gen writes all four artifacts and spectral reads the graph back") {
    TempDir dir("gen");
    REQUIRE(run({"gen", "--n", "4", "--d", "3", "--k", "2", "--noise", "0", "--seed", "1",
                 "--out", dir.path.string()}) == 0);
    for (const char* name : {"graph.json", "instance.json", "plant.json", "sdp.json"})
        CHECK(fs::exists(dir.path / name));
    // Round-trip sanity through the library parsers.
    const UGInstance inst = parse_instance(read_all(dir.file("instance.json")));
    CHECK(inst.graph.n == 4);
    CHECK(inst.k == 2);
    const Assignment plant = parse_assignment(read_all(dir.file("plant.json")));
    CHECK(evaluate(inst, plant) == 1.0);

    const std::string rep_path = dir.file("spectral.json");
    REQUIRE(run({"spectral", "--graph", dir.file("graph.json"), "--out", rep_path}) == 0);
    const json rep = parse_json_text(read_all(rep_path), "spectral report");
    CHECK(rep.at("lambda2").get<double>() == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(rep.at("h_is_exact").get<bool>());
    CHECK(rep.at("h").get<double>() == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(rep.at("cheeger_ok").get<bool>());
}

TEST_CASE("verify-sdp accepts generated solutions and reports the tolerance") {
    TempDir dir("verify");
    REQUIRE(run({"gen", "--n", "12", "--d", "4", "--k", "3", "--noise", "0.25", "--seed", "3",
                 "--mix-weight", "0.9", "--out", dir.path.string()}) == 0);
    const std::string rep_path = dir.file("feas.json");
    CHECK(run({"verify-sdp", "--sdp", dir.file("sdp.json"), "--instance",
               dir.file("instance.json"), "--out", rep_path}) == 0);
    const json rep = parse_json_text(read_all(rep_path), "feasibility report");
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("tol").get<double>() == 1e-9);
}

TEST_CASE("verify-sdp exits 2 on an infeasible solution file") {
    TempDir dir("infeasible");
    SdpSolution s;
    s.n = 1;
    s.k = 2;
    s.dim = 1;
    s.vectors = RowMatrixXd::Ones(2, 1) * 0.70710678118654752;  // u_1 = u_2
    const std::string path = dir.file("bad_sdp.json");
    write_text_file(path, serialize_sdp(s));
    CHECK(run({"verify-sdp", "--sdp", path}) == 2);
}

TEST_CASE("normalize writes a loadable normalized solution") {
    TempDir dir("normalize");
    REQUIRE(run({"gen", "--n", "14", "--d", "4", "--k", "3", "--noise", "0.1", "--seed", "5",
                 "--mix-weight", "0.85", "--out", dir.path.string()}) == 0);
    const std::string out = dir.file("normalized.json");
    REQUIRE(run({"normalize", "--sdp", dir.file("sdp.json"), "--instance",
                 dir.file("instance.json"), "--out", out}) == 0);
    const NormalizedSolution ns = parse_normalized(read_all(out));
    CHECK(ns.n == 14);
    CHECK(ns.k == 3);
    const SdpSolution s = parse_sdp(read_all(dir.file("sdp.json")));
    CHECK(verify_normalization(s, ns, 1e-8).pass());
}

TEST_CASE("emd reports 0 for an integral solution and writes the pair CSV") {
    TempDir dir("emd");
    REQUIRE(run({"gen", "--n", "10", "--d", "3", "--k", "3", "--noise", "0.2", "--seed", "9",
                 "--out", dir.path.string()}) == 0);
    const std::string rep_path = dir.file("emd.json");
    const std::string csv_path = dir.file("emd.csv");
    REQUIRE(run({"emd", "--sdp", dir.file("sdp.json"), "--out", rep_path, "--csv",
                 csv_path}) == 0);
    const json rep = parse_json_text(read_all(rep_path), "emd report");
    CHECK(rep.at("value").get<double>() == 0.0);
    CHECK(rep.at("exact").get<bool>());
    CHECK(rep.at("pairs").get<int>() == 100);
    const std::string csv = read_all(csv_path);
    CHECK(csv.rfind("u,v,emd\n", 0) == 0);
    // Header plus one row per unordered pair including the diagonal.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 10 * 11 / 2);
}

TEST_CASE("round on a perfect instance recovers the plant but trips the epsilon-0 gate") {
    TempDir dir("round0");
    REQUIRE(run({"gen", "--n", "10", "--d", "3", "--k", "3", "--noise", "0", "--seed", "2",
                 "--out", dir.path.string()}) == 0);
    for (const char* mode : {"mc", "derand"}) {
        const std::string out = dir.file(std::string("outcome_") + mode + ".json");
        // epsilon = 0 makes the size gate |X| <= n vacuous, hence exit 3 by
        // contract even though the assignment is perfect.
        CHECK(run({"round", "--instance", dir.file("instance.json"), "--sdp",
                   dir.file("sdp.json"), "--mode", mode, "--trials", "4", "--out", out}) == 3);
        const json o = parse_json_text(read_all(out), "outcome");
        CHECK(o.at("satisfied").get<double>() == 1.0);
        CHECK(o.at("failed").get<bool>());
        const Assignment plant = parse_assignment(read_all(dir.file("plant.json")));
        const UGInstance inst = parse_instance(read_all(dir.file("instance.json")));
        for (int v = 0; v < inst.graph.n; ++v)
            CHECK(o.at("assignment")[v].get<int>() == plant.labels[v]);
    }
}

TEST_CASE("round on a noisy mixture exits 0 and recovers most of the plant") {
    TempDir dir("roundnoise");
    REQUIRE(run({"gen", "--n", "20", "--d", "4", "--k", "3", "--noise", "0.1", "--seed", "4",
                 "--mix-weight", "0.95", "--out", dir.path.string()}) == 0);
    const std::string out = dir.file("outcome.json");
    CHECK(run({"round", "--instance", dir.file("instance.json"), "--sdp", dir.file("sdp.json"),
               "--mode", "mc", "--trials", "32", "--seed", "7", "--out", out}) == 0);
    const json o = parse_json_text(read_all(out), "outcome");
    CHECK(o.at("satisfied").get<double>() >= 0.8);
    CHECK_FALSE(o.at("failed").get<bool>());
}

TEST_CASE("round rejects invalid parameters with exit 1") {
    TempDir dir("roundbad");
    REQUIRE(run({"gen", "--n", "8", "--d", "3", "--k", "2", "--noise", "0", "--seed", "6",
                 "--out", dir.path.string()}) == 0);
    const std::vector<std::string> base = {"round", "--instance", dir.file("instance.json"),
                                           "--sdp", dir.file("sdp.json")};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args);
    };
    CHECK(with({"--R", "0.3"}) == 1);
    CHECK(with({"--R", "0"}) == 1);
    CHECK(with({"--mode", "quantum"}) == 1);
    CHECK(with({"--fallback", "teleport"}) == 1);
    CHECK(run({"round", "--instance", dir.file("missing.json"), "--sdp",
               dir.file("sdp.json")}) == 1);
}

TEST_CASE("CLI parse failures and help have the right exit codes") {
    CHECK(run({"no-such-command"}) == 1);
    CHECK(run({}) == 1);
    CHECK(run({"--help"}) == 0);
    CHECK(run({"spectral"}) == 1);              // missing required --graph
    CHECK(run({"round", "--bogus-flag"}) == 1);
}

TEST_CASE("malformed input files exit 1") {
    TempDir dir("malformed");
    write_text_file(dir.file("junk.json"), "this is not json\n");
    CHECK(run({"spectral", "--graph", dir.file("junk.json")}) == 1);
    CHECK(run({"verify-sdp", "--sdp", dir.file("junk.json")}) == 1);
    CHECK(run({"brute", "--instance", dir.file("junk.json")}) == 1);
}

TEST_CASE("monitor emits the CSV and exits 0 when all bounds hold") {
    TempDir dir("monitor");
    REQUIRE(run({"gen", "--n", "12", "--d", "3", "--k", "2", "--noise", "0", "--seed", "8",
                 "--out", dir.path.string()}) == 0);
    const std::string out = dir.file("monitors.csv");
    CHECK(run({"monitor", "--instance", dir.file("instance.json"), "--sdp",
               dir.file("sdp.json"), "--trials", "200", "--out", out}) == 0);
    const std::string csv = read_all(out);
    CHECK(csv.rfind("name,estimate,stderr,bound,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
    CHECK(csv.find(",false\n") == std::string::npos);
}

TEST_CASE("brute solves the generated instance optimally") {
    TempDir dir("brute");
    REQUIRE(run({"gen", "--n", "8", "--d", "3", "--k", "2", "--noise", "0.25", "--seed", "10",
                 "--out", dir.path.string()}) == 0);
    const std::string out = dir.file("brute.json");
    REQUIRE(run({"brute", "--instance", dir.file("instance.json"), "--out", out}) == 0);
    const json o = parse_json_text(read_all(out), "brute result");
    CHECK(o.at("enumerated").get<int>() == 256);
    const UGInstance inst = parse_instance(read_all(dir.file("instance.json")));
    Assignment best;
    for (const auto& x : o.at("labels")) best.labels.push_back(x.get<int>());
    CHECK(evaluate(inst, best) == o.at("value").get<double>());
    // The plant violates exactly floor(0.25 * 12) = 3 edges; the optimum can
    // only be at least as good.
    CHECK(o.at("value").get<double>() >= 1.0 - 3.0 / 12.0);
}

TEST_CASE("experiment writes a consistent results.csv") {
    TempDir dir("experiment");
    // mix-weight 1 keeps the SDP integral, so the noise-0 row must hit
    // eps_sdp = 0 and the theorem bound's eps-0 convention of exactly 1.
    REQUIRE(run({"experiment", "--n", "16", "--d", "4", "--k", "3", "--noise-grid", "0,0.1",
                 "--mix-weight", "1.0", "--trials", "8", "--seed", "12", "--out-dir",
                 dir.path.string()}) == 0);
    const std::string csv = read_all(dir.file("results.csv"));
    std::istringstream lines(csv);
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "n,d,k,noise,eps_sdp,lambda2,h,avg_emd,R,satisfied_best,bound_theorem,pass");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() == 12);
        CHECK(cells[0] == "16");
        CHECK(cells[1] == "4");
        CHECK(cells[2] == "3");
        const double satisfied = std::stod(cells[9]);
        const double bound = std::stod(cells[10]);
        CHECK(cells[11] == ((satisfied >= bound) ? "true" : "false"));
        // Noise 0 must give eps_sdp = 0 and bound 1; the best of 8 trials on a
        // perfect instance is a full recovery.
        if (cells[3] == "0") {
            CHECK(std::stod(cells[4]) == 0.0);
            CHECK(bound == 1.0);
            CHECK(satisfied == 1.0);
        }
    }
    CHECK(rows == 2);
}

TEST_CASE("experiment validates its own options") {
    TempDir dir("expbad");
    CHECK(run({"experiment", "--noise-grid", "abc", "--out-dir", dir.path.string()}) == 1);
    CHECK(run({"experiment", "--noise-grid", "", "--out-dir", dir.path.string()}) == 1);
    CHECK(run({"experiment", "--R", "0.5", "--out-dir", dir.path.string()}) == 1);
    CHECK(run({"experiment", "--trials", "0", "--out-dir", dir.path.string()}) == 1);
}
