#include <doctest.h>

#include <cmath>

#include "inertial/generators.hpp"
#include "inertial/inertia.hpp"
#include "inertial/rng.hpp"
#include "inertial/spectrum.hpp"
#include "oracles.hpp"

using namespace inertial;

TEST_SUITE("spectrum") {

TEST_CASE("C5 spectrum") {
    Spectrum s = numeric_spectrum(gen_cycle(5));
    REQUIRE(s.size() == 5);
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.6180...
    CHECK(s.values()[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(s.values()[1] == doctest::Approx(golden).epsilon(1e-9));
    CHECK(s.values()[2] == doctest::Approx(golden).epsilon(1e-9));
    CHECK(s.values()[3] == doctest::Approx(-golden - 1.0).epsilon(1e-9));
    CHECK(s.values()[4] == doctest::Approx(-golden - 1.0).epsilon(1e-9));
}

TEST_CASE("K4 spectrum") {
    Spectrum s = numeric_spectrum(gen_complete(4));
    CHECK(s.values()[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) CHECK(s.values()[i] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("Petersen spectrum 3 1^5 (-2)^4") {
    Spectrum s = numeric_spectrum(gen_kneser(5, 2));
    CHECK(s.values()[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int i = 1; i <= 5; ++i) CHECK(s.values()[i] == doctest::Approx(1.0).epsilon(1e-9));
    for (int i = 6; i <= 9; ++i) CHECK(s.values()[i] == doctest::Approx(-2.0).epsilon(1e-9));
}

TEST_CASE("edgeless graph") {
    Spectrum s = numeric_spectrum(gen_empty(4));
    for (double v : s.values()) CHECK(v == 0.0);
    CHECK(sign_counts(s, 1e-8) == Inertia{0, 4, 0});
}

TEST_CASE("sign counts match exact inertia on random graphs") {
    SplitMix64 rng(99);
    for (int t = 0; t < 120; ++t) {
        const int n = 1 + static_cast<int>(rng.below(12));
        Graph g = oracle::random_graph(n, rng);
        CHECK(sign_counts(numeric_spectrum(g, 1e-9), 1e-8) == inertia(g));
    }
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS_AS(numeric_spectrum(gen_cycle(5), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Spectrum::from_values({1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("from_values sorts descending") {
    Spectrum s = Spectrum::from_values({-1.0, 3.0, 0.5}, 1e-9);
    CHECK(s.values() == std::vector<double>{3.0, 0.5, -1.0});
}

}  // TEST_SUITE
