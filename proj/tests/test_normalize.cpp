#include <doctest.h>

#include <cmath>
#include <tuple>
#include <utility>
#include <vector>

#include "ugx/errors.hpp"
#include "ugx/normalize.hpp"
#include "ugx/random.hpp"

using namespace ugx;

namespace {

Assignment random_assignment(int n, int k, std::uint64_t seed) {
    Rng rng(seed);
    Assignment a;
    for (int v = 0; v < n; ++v) a.labels.push_back(static_cast<int>(rng.bounded(k)));
    return a;
}

std::pair<UGInstance, Assignment> planted(int n, int d, int k, double noise,
                                          std::uint64_t seed) {
    return gen_planted(gen_random_regular(n, d, seed), k, noise, seed + 1);
}

SdpSolution plant_random_mix(const UGInstance& inst, const Assignment& plant, double w,
                             std::uint64_t seed) {
    const Assignment rnd = random_assignment(inst.graph.n, inst.k, seed);
    return mix_solutions({{integral_solution(inst, plant), w},
                          {integral_solution(inst, rnd), 1.0 - w}});
}

}  // namespace

TEST_CASE("integral solution normalizes to itself up to the unit embedding") {
    const auto [inst, plant] = planted(12, 3, 3, 0.0, 4);
    const SdpSolution s = integral_solution(inst, plant);
    const NormalizedSolution ns = normalize(s);
    CHECK(ns.zero_labels.size() == static_cast<std::size_t>(12 * 2));  // k-1 zeros per vertex
    // All assigned vectors coincide, so the normalized Gram is all-ones and
    // dim collapses to 1 with every live row equal to the same unit vector.
    CHECK(ns.dim == 1);
    const auto rep = verify_normalization(s, ns, 1e-12);
    CHECK(rep.pass());
    for (int v = 0; v < 12; ++v) {
        CHECK_FALSE(ns.zero(v, plant.labels[v]));
        CHECK(ns.vectors.row(ns.row(v, plant.labels[v])).squaredNorm() ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("plant/random mixtures normalize within 1e-8 on every property") {
    for (auto [n, d, k, noise, w, seed] :
         {std::tuple{12, 4, 4, 0.1, 0.9, 31ull}, {15, 4, 4, 0.2, 0.8, 32ull},
          {20, 3, 3, 0.0, 0.95, 33ull}}) {
        const auto [inst, plant] = planted(n, d, k, noise, seed);
        const SdpSolution s = plant_random_mix(inst, plant, w, seed + 100);
        const NormalizedSolution ns = normalize(s);
        const auto rep = verify_normalization(s, ns, 1e-8, 100000, &inst.graph);
        INFO("n=", n, " k=", k, " max violation ", rep.max_violation());
        CHECK(rep.pass());
        CHECK(rep.triples_exhaustive == (n * k - static_cast<int>(ns.zero_labels.size()) <= 60));
    }
}

TEST_CASE("three-part mixtures keep every live label and stay normalized") {
    const auto [inst, plant] = planted(10, 3, 3, 0.2, 8);
    const SdpSolution s =
        mix_solutions({{integral_solution(inst, plant), 0.5},
                       {integral_solution(inst, random_assignment(10, 3, 1)), 0.25},
                       {integral_solution(inst, random_assignment(10, 3, 2)), 0.25}});
    const NormalizedSolution ns = normalize(s);
    const auto rep = verify_normalization(s, ns, 1e-8);
    CHECK(rep.pass());
    // Distance law: squared distance = 2 - 2 * normalized inner product.
    const double raw = s.vectors.row(0).dot(s.vectors.row(s.k));
    const double na = s.vectors.row(0).squaredNorm();
    const double nb = s.vectors.row(s.k).squaredNorm();
    if (na > 1e-12 && nb > 1e-12) {
        const double target = raw / std::max(na, nb);
        const double dist = (ns.vectors.row(0) - ns.vectors.row(ns.k)).squaredNorm();
        CHECK(dist == doctest::Approx(2.0 - 2.0 * target).epsilon(1e-9));
    }
}

TEST_CASE("same-vertex live labels sit at squared distance exactly 2") {
    const auto [inst, plant] = planted(14, 4, 3, 0.25, 12);
    const SdpSolution s = plant_random_mix(inst, plant, 0.7, 200);
    const NormalizedSolution ns = normalize(s);
    for (int v = 0; v < 14; ++v)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if (ns.zero(v, i) || ns.zero(v, j)) continue;
                const double dist =
                    (ns.vectors.row(ns.row(v, i)) - ns.vectors.row(ns.row(v, j))).squaredNorm();
                CHECK(dist == doctest::Approx(2.0).epsilon(1e-9));
            }
}

TEST_CASE("a corrupted unit norm is reported with the right magnitude") {
    const auto [inst, plant] = planted(10, 3, 2, 0.0, 6);
    const SdpSolution s = plant_random_mix(inst, plant, 0.9, 300);
    NormalizedSolution ns = normalize(s);
    int live_row = -1;
    for (Index r = 0; r < ns.vectors.rows(); ++r)
        if (!ns.is_zero[static_cast<std::size_t>(r)]) {
            live_row = static_cast<int>(r);
            break;
        }
    REQUIRE(live_row >= 0);
    ns.vectors.row(live_row) *= 1.1;
    const auto rep = verify_normalization(s, ns, 1e-8);
    // ||1.1 nu||^2 - 1 = 0.21.
    CHECK(rep.unit_norm == doctest::Approx(0.21).epsilon(1e-9));
    CHECK_FALSE(rep.pass());
}

TEST_CASE("roundoff-scale negative eigenvalues are clamped to zero") {
    // Rank-deficient targets put eigenvalues at numerical zero; the clamp has
    // to absorb the negative side without inventing imaginary coordinates.
    const auto [inst, plant] = planted(12, 4, 3, 0.1, 14);
    const SdpSolution s = plant_random_mix(inst, plant, 0.85, 400);
    const NormalizedSolution ns = normalize(s, 1e-12, 1e-8);
    CHECK(verify_normalization(s, ns, 1e-8).pass());
    for (Index r = 0; r < ns.vectors.rows(); ++r)
        for (Index c = 0; c < ns.vectors.cols(); ++c) CHECK(std::isfinite(ns.vectors(r, c)));
}

TEST_CASE("a perturbed input still normalizes with clamping") {
    const auto [inst, plant] = planted(10, 3, 3, 0.1, 18);
    SdpSolution s = plant_random_mix(inst, plant, 0.9, 500);
    Rng rng(42);
    for (Index r = 0; r < s.vectors.rows(); ++r)
        for (Index c = 0; c < s.vectors.cols(); ++c)
            s.vectors(r, c) += 1e-10 * (rng.unit() - 0.5);
    const NormalizedSolution ns = normalize(s);
    const auto rep = verify_normalization(s, ns, 1e-8);
    CHECK(rep.pass());
}

TEST_CASE("a vertex with no live label is rejected") {
    const auto [inst, plant] = planted(8, 3, 2, 0.0, 3);
    SdpSolution s = integral_solution(inst, plant);
    s.vectors.row(s.row(0, plant.labels[0])).setZero();  // vertex 0 now all-zero
    CHECK_THROWS_AS(normalize(s), input_error);
}

TEST_CASE("zero_tol controls which labels survive") {
    const auto [inst, plant] = planted(8, 3, 2, 0.0, 3);
    const SdpSolution s = plant_random_mix(inst, plant, 1.0 - 1e-10, 600);
    // Labels carried only by the random part have squared norm 1e-10.
    const NormalizedSolution strict = normalize(s, 1e-8);
    const NormalizedSolution loose = normalize(s, 1e-12);
    CHECK(strict.zero_labels.size() >= loose.zero_labels.size());
    for (auto [v, i] : loose.zero_labels) CHECK(s.vectors.row(s.row(v, i)).squaredNorm() <= 1e-12);
}

TEST_CASE("normalized JSON round trip") {
    const auto [inst, plant] = planted(9, 4, 3, 0.25, 10);
    const SdpSolution s = plant_random_mix(inst, plant, 0.75, 700);
    const NormalizedSolution ns = normalize(s);
    const NormalizedSolution back = parse_normalized(serialize_normalized(ns));
    CHECK(back.n == ns.n);
    CHECK(back.k == ns.k);
    CHECK(back.dim == ns.dim);
    CHECK(back.zero_labels == ns.zero_labels);
    CHECK(back.is_zero == ns.is_zero);
    CHECK((back.vectors.array() == ns.vectors.array()).all());
}
