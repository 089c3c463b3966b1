#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "inertial/bounds.hpp"
#include "inertial/generators.hpp"
#include "inertial/inertia.hpp"
#include "inertial/rng.hpp"
#include "inertial/spectrum.hpp"
#include "oracles.hpp"

using namespace inertial;

namespace {

Spectrum alon_seymour_fixture() {
    // 56^1 4^7 0^35 (-4)^21, the 64-vertex spectrum quoted for the
    // Alon–Seymour counterexample discussion
    std::vector<double> v{56.0};
    for (int i = 0; i < 7; ++i) v.push_back(4.0);
    for (int i = 0; i < 35; ++i) v.push_back(0.0);
    for (int i = 0; i < 21; ++i) v.push_back(-4.0);
    return Spectrum::from_values(std::move(v), 1e-9);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("inertial_bound") {
    CHECK(inertial_bound(Inertia{6, 0, 4}) == Rational(5, 2));
    CHECK(inertial_bound(Inertia{1, 0, 5}) == Rational(6));   // K6
    CHECK(inertial_bound(Inertia{8, 35, 21}) == Rational(29, 8));
    CHECK(inertial_bound(Inertia{4, 0, 6}) == inertial_bound(Inertia{6, 0, 4}));
    CHECK_THROWS_AS(inertial_bound(Inertia{0, 5, 0}), std::invalid_argument);
    CHECK_THROWS_AS(inertial_bound(Inertia{3, 0, 0}), std::invalid_argument);
}

TEST_CASE("inertia_cap_check") {
    CHECK(inertia_cap_check(Inertia{1, 0, 3}, 4));        // K4, equality
    CHECK(inertia_cap_check(Inertia{6, 0, 4}, 3));        // Petersen: 6 <= 20/3
    CHECK_FALSE(inertia_cap_check(Inertia{5, 0, 5}, 1));  // cap is 0
    CHECK(inertia_cap_check(Inertia{0, 5, 0}, 1));        // edgeless passes at chi=1
}

TEST_CASE("hoffman_bound") {
    const double c5 = hoffman_bound(numeric_spectrum(gen_cycle(5)));
    CHECK(std::abs(c5 - std::sqrt(5.0)) < 1e-6);
    const double k6 = hoffman_bound(numeric_spectrum(gen_complete(6)));
    CHECK(std::abs(k6 - 6.0) < 1e-6);
    CHECK(hoffman_bound(alon_seymour_fixture()) == doctest::Approx(15.0).epsilon(1e-9));
    CHECK_THROWS_AS(hoffman_bound(Spectrum::from_values({0.0, 0.0}, 1e-9)),
                    std::invalid_argument);
}

TEST_CASE("hoffman_full_chi") {
    CHECK(hoffman_full_chi(numeric_spectrum(gen_complete(6))) == 6);
    CHECK(hoffman_full_chi(numeric_spectrum(gen_cycle(5))) == 3);
    CHECK(hoffman_full_chi(alon_seymour_fixture()) == 15);
}

TEST_CASE("hoffman invariants on random graphs") {
    SplitMix64 rng(31);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng.below(11));
        Graph g = oracle::random_graph(n, rng);
        if (g.edge_count() == 0) continue;
        Spectrum s = numeric_spectrum(g);
        const int full = hoffman_full_chi(s);
        CHECK(full <= n);
        CHECK(full >= static_cast<int>(std::ceil(hoffman_bound(s) - 1e-9)));
        const int chi_lb = static_cast<int>(
            rational_ceil(inertial_bound(inertia(g))).convert_to<long long>());
        CHECK(chi_lb <= oracle::brute_chi(g));
    }
}

TEST_CASE("chif_nonsingular_bound") {
    CHECK(chif_nonsingular_bound(Inertia{3, 0, 2}) == Rational(5, 2));
    CHECK(chif_nonsingular_bound(Inertia{6, 0, 4}) == Rational(5, 2));
    CHECK_THROWS_AS(chif_nonsingular_bound(Inertia{1, 4, 1}), std::invalid_argument);
    // identity with inertial_bound on nonsingular inertia
    SplitMix64 rng(32);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracle::random_graph(2 + static_cast<int>(rng.below(9)), rng);
        const Inertia i = inertia(g);
        if (i.n_plus < 1 || i.n_minus < 1 || i.n_zero != 0) continue;
        CHECK(chif_nonsingular_bound(i) == inertial_bound(i));
    }
}

}  // TEST_SUITE
