#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "ugx/errors.hpp"
#include "ugx/spectral.hpp"

using namespace ugx;

namespace {

Graph cycle(int n) {
    Graph g;
    g.n = n;
    g.d = 2;
    for (int v = 0; v + 1 < n; ++v) g.edges.push_back({v, v + 1});
    g.edges.insert(g.edges.begin(), {0, n - 1});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph complete(int n) {
    Graph g;
    g.n = n;
    g.d = n - 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v});
    return g;
}

Graph two_triangles() {
    Graph g;
    g.n = 6;
    g.d = 2;
    g.edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    return g;
}

}  // namespace

TEST_CASE("K4: lambda2 = h = 4/3") {
    const auto rep = spectral_report(complete(4));
    CHECK(rep.lambda2 == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    REQUIRE(rep.h_is_exact);
    CHECK(rep.h == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(rep.cheeger_ok);
    CHECK(rep.h_lower <= rep.lambda2 + 1e-12);
    CHECK(rep.lambda2 <= rep.h_upper + 1e-12);
}

TEST_CASE("4-cycle: lambda2 = 1, h = 1") {
    const auto rep = spectral_report(cycle(4));
    CHECK(rep.lambda2 == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(rep.h_is_exact);
    CHECK(rep.h == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed forms: n-cycle and complete graph") {
    // Cycle eigenvalues are 1 - cos(2*pi*j/n); K_n has lambda2 = n/(n-1) and,
    // being vertex transitive with balanced optimal cuts, h = n/(n-1) too.
    const double l8 = laplacian_lambda2(cycle(8));
    CHECK(l8 == doctest::Approx(1.0 - std::cos(std::numbers::pi / 4)).epsilon(1e-10));
    const auto k6 = spectral_report(complete(6));
    CHECK(k6.lambda2 == doctest::Approx(1.2).epsilon(1e-12));
    REQUIRE(k6.h_is_exact);
    CHECK(k6.h == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("disconnected graph: lambda2 = 0 and h = 0") {
    const auto rep = spectral_report(two_triangles());
    CHECK(std::abs(rep.lambda2) <= 1e-10);
    REQUIRE(rep.h_is_exact);
    CHECK(rep.h == 0.0);
    CHECK(edge_expansion_exact(two_triangles()) == 0.0);
}

TEST_CASE("Lanczos agrees with the dense solver") {
    for (auto [n, d, seed] : {std::tuple{50, 4, 1ull}, {120, 6, 2ull}, {200, 8, 3ull},
                              {64, 3, 4ull}}) {
        const Graph g = gen_random_regular(n, d, seed);
        const double fast = laplacian_lambda2(g);
        const double dense = laplacian_lambda2_dense(g);
        CHECK(std::abs(fast - dense) <= 1e-10);
    }
}

TEST_CASE("exact expansion matches a brute-force oracle on tiny graphs") {
    // Independent re-computation in doubles over all subsets.
    for (auto [n, d, seed] : {std::tuple{8, 3, 5ull}, {10, 4, 6ull}, {12, 3, 7ull}}) {
        const Graph g = gen_random_regular(n, d, seed);
        double best = std::numeric_limits<double>::infinity();
        const auto m = static_cast<double>(g.num_edges());
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            int cut = 0;
            for (auto [u, v] : g.edges)
                cut += ((mask >> u) ^ (mask >> v)) & 1u;
            const int size = std::min(std::popcount(mask), n - std::popcount(mask));
            best = std::min(best, (cut / m) / (static_cast<double>(size) / n));
        }
        CHECK(edge_expansion_exact(g) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("Cheeger sandwich holds exactly for all small graphs tested") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_random_regular(16, 4, seed);
        const auto rep = spectral_report(g);
        REQUIRE(rep.h_is_exact);
        CHECK(rep.cheeger_ok);
        CHECK(rep.cheeger_lower <= rep.lambda2 + 1e-9);
        CHECK(rep.lambda2 <= rep.cheeger_upper + 1e-9);
    }
}

TEST_CASE("large graphs report a certified interval instead of exact h") {
    const Graph g = gen_random_regular(100, 4, 7);
    const auto rep = spectral_report(g);
    CHECK_FALSE(rep.h_is_exact);
    CHECK(std::isnan(rep.h));
    CHECK(rep.h_lower == doctest::Approx(rep.lambda2));
    CHECK(rep.h_upper == doctest::Approx(std::sqrt(8.0 * rep.lambda2)));
}

TEST_CASE("exact expansion refuses oversized graphs") {
    const Graph g = gen_random_regular(26, 3, 1);
    CHECK_THROWS_AS(edge_expansion_exact(g), size_error);
    CHECK_NOTHROW(edge_expansion_exact(g, 26));
}
