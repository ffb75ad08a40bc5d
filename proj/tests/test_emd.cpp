#include <doctest.h>

#include <cmath>
#include <tuple>
#include <utility>
#include <vector>

#include "ugx/emd.hpp"
#include "ugx/errors.hpp"
#include "ugx/oracle.hpp"
#include "ugx/random.hpp"

using namespace ugx;

namespace {

// Bare two-vertex solution with prescribed label vectors (no feasibility
// requirements; EMD is defined for any vector family).
SdpSolution two_vertex(const std::vector<std::vector<double>>& u,
                       const std::vector<std::vector<double>>& v) {
    SdpSolution s;
    s.n = 2;
    s.k = static_cast<int>(u.size());
    s.dim = static_cast<int>(u[0].size());
    s.vectors = RowMatrixXd::Zero(2 * s.k, s.dim);
    for (int i = 0; i < s.k; ++i)
        for (int c = 0; c < s.dim; ++c) {
            s.vectors(i, c) = u[i][c];
            s.vectors(s.k + i, c) = v[i][c];
        }
    return s;
}

SdpSolution random_mixture(int n, int d, int k, double noise, double w, std::uint64_t seed) {
    const Graph g = gen_random_regular(n, d, seed);
    const auto [inst, plant] = gen_planted(g, k, noise, seed + 1);
    Rng rng(seed + 2);
    Assignment rnd;
    for (int v = 0; v < n; ++v) rnd.labels.push_back(static_cast<int>(rng.bounded(k)));
    return mix_solutions({{integral_solution(inst, plant), w},
                          {integral_solution(inst, rnd), 1.0 - w}});
}

}  // namespace

TEST_CASE("identical vector families are at distance 0") {
    const auto s = two_vertex({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
    const auto rep = emd_pair(s, 0, 1);
    CHECK(rep.value == 0.0);
    CHECK(rep.matching == std::vector<int>{0, 1});
}

TEST_CASE("a permuted family is still at distance 0, via the swap matching") {
    const auto s = two_vertex({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
    const auto rep = emd_pair(s, 0, 1);
    CHECK(rep.value == 0.0);
    CHECK(rep.matching == std::vector<int>{1, 0});
}

TEST_CASE("orthogonal families pay squared distance 2 per pair") {
    const auto s = two_vertex({{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(emd_pair(s, 0, 1).value == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("asymmetric weights pick the cheaper matching") {
    // u = (2e1, e2), v = (e1, e2): identity matching costs 1 + 0 = 1,
    // swap costs ||2e1-e2||^2 + ||e2-e1||^2 = 5 + 2 = 7.
    const auto s = two_vertex({{2, 0}, {0, 1}}, {{1, 0}, {0, 1}});
    const auto rep = emd_pair(s, 0, 1);
    CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.matching == std::vector<int>{0, 1});
}

TEST_CASE("EMD is symmetric") {
    for (std::uint64_t seed : {9ull, 10ull, 11ull}) {
        const SdpSolution s = random_mixture(12, 4, 4, 0.25, 0.8, seed);
        for (auto [u, v] : {std::pair{0, 5}, {1, 2}, {3, 11}}) {
            CHECK(emd_pair(s, u, v).value ==
                  doctest::Approx(emd_pair(s, v, u).value).epsilon(1e-13));
        }
    }
}

TEST_CASE("assignment algorithm matches factorial brute force") {
    for (int k = 1; k <= 6; ++k) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Rng rng(1000 * k + seed);
            SdpSolution s;
            s.n = 2;
            s.k = k;
            s.dim = 3;
            s.vectors = RowMatrixXd::Zero(2 * k, 3);
            for (Index r = 0; r < s.vectors.rows(); ++r)
                for (Index c = 0; c < 3; ++c) s.vectors(r, c) = 2.0 * rng.unit() - 1.0;
            CHECK(emd_pair(s, 0, 1).value ==
                  doctest::Approx(emd_brute(s, 0, 1)).epsilon(1e-12));
        }
    }
}

TEST_CASE("ties break to the lowest-index matching") {
    MatrixX<double> cost(2, 2);
    cost << 1.0, 1.0, 1.0, 1.0;
    std::vector<int> match;
    CHECK(min_cost_assignment(cost, match) == doctest::Approx(2.0));
    CHECK(match == std::vector<int>{0, 1});
}

TEST_CASE("average EMD of any integral solution is 0") {
    // Assigned labels map to the same single ambient coordinate, so every
    // pair admits a zero-cost matching no matter how labels differ.
    const Graph g = gen_random_regular(20, 4, 3);
    const auto [inst, plant] = gen_planted(g, 4, 0.3, 5);
    const SdpSolution s = integral_solution(inst, plant);
    const auto rep = avg_emd(s, true);
    CHECK(rep.exact);
    CHECK(rep.value == 0.0);
    CHECK(rep.pairs == 400);
}

TEST_CASE("average EMD of a two-assignment mixture matches the closed form") {
    // Delta(u,v) = 0 when agree(u) == agree(v), else 2*min(w1,w2), where
    // agree(x) means the two mixed assignments give x the same label.
    const int n = 30;
    const Graph g = gen_random_regular(n, 4, 8);
    const auto [inst, plant] = gen_planted(g, 5, 0.0, 9);
    Rng rng(17);
    Assignment rnd;
    for (int v = 0; v < n; ++v) rnd.labels.push_back(static_cast<int>(rng.bounded(5)));
    const double w = 0.85;
    const SdpSolution s = mix_solutions(
        {{integral_solution(inst, plant), w}, {integral_solution(inst, rnd), 1.0 - w}});

    std::vector<bool> agree(n);
    for (int v = 0; v < n; ++v) agree[v] = plant.labels[v] == rnd.labels[v];
    double total = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (agree[u] != agree[v]) total += 2.0 * (1.0 - w);
    const double expect = total / (static_cast<double>(n) * n);

    const auto rep = avg_emd(s, true);
    CHECK(rep.value == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sampled average agrees with exact within a few standard errors") {
    const SdpSolution s = random_mixture(40, 4, 3, 0.2, 0.75, 21);
    const auto exact = avg_emd(s, true);
    const auto sampled = avg_emd(s, false, 20000, 4);
    CHECK(sampled.pairs == 20000);
    CHECK_FALSE(sampled.exact);
    REQUIRE(sampled.stderr_value > 0.0);
    CHECK(std::abs(sampled.value - exact.value) <= 5.0 * sampled.stderr_value);
}

TEST_CASE("sampled mode is deterministic given the seed") {
    const SdpSolution s = random_mixture(25, 4, 3, 0.2, 0.8, 30);
    const auto a = avg_emd(s, false, 500, 77);
    const auto b = avg_emd(s, false, 500, 77);
    CHECK(a.value == b.value);
    CHECK(a.stderr_value == b.stderr_value);
}

TEST_CASE("exact mode refuses n > 300") {
    SdpSolution s;
    s.n = 301;
    s.k = 1;
    s.dim = 1;
    s.vectors = RowMatrixXd::Ones(301, 1);
    CHECK_THROWS_AS(avg_emd(s, true), size_error);
    CHECK_NOTHROW(avg_emd(s, false, 100, 0));
}

TEST_CASE("emd_brute refuses k > k_max") {
    SdpSolution s;
    s.n = 2;
    s.k = 7;
    s.dim = 1;
    s.vectors = RowMatrixXd::Ones(14, 1);
    CHECK_THROWS_AS(emd_brute(s, 0, 1), size_error);
    CHECK_NOTHROW(emd_brute(s, 0, 1, 7));
}
