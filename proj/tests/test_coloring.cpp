#include "doctest.h"

#include <stdexcept>

#include "inertial/budget.hpp"
#include "inertial/coloring.hpp"
#include "inertial/generators.hpp"
#include "inertial/graph.hpp"
#include "inertial/graph6.hpp"
#include "inertial/rng.hpp"
#include "oracles.hpp"

using namespace inertial;

TEST_SUITE("coloring") {

TEST_CASE("chromatic number fixtures") {
    CHECK(chromatic_number(gen_cycle(5)) == 3);
    CHECK(chromatic_number(gen_cycle(6)) == 2);
    CHECK(chromatic_number(gen_complete(6)) == 6);
    CHECK(chromatic_number(gen_kneser(5, 2)) == 3);
    CHECK(chromatic_number(gen_barbell(4)) == 4);
    CHECK(chromatic_number(gen_generalized_petersen(5, 2)) == 3);
    CHECK(chromatic_number(gen_empty(7)) == 1);
    CHECK(chromatic_number(gen_complete_multipartite({1, 2, 3})) == 3);
    CHECK(chromatic_number(gen_path(1)) == 1);
}

TEST_CASE("chromatic number matches brute force") {
    SplitMix64 rng(0xC01091u);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(7));
        Graph g = oracle::random_graph(n, rng);
        int chi = chromatic_number(g);
        CAPTURE(encode_graph6(g));
        CHECK(chi == oracle::brute_chi(g));
    }
}

TEST_CASE("chromatic number is colorable at chi but not below") {
    SplitMix64 rng(0xC01092u);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.below(8));
        Graph g = oracle::random_graph(n, rng);
        int chi = chromatic_number(g);
        CHECK(oracle::colorable(g, chi));
        if (chi > 1) CHECK_FALSE(oracle::colorable(g, chi - 1));
    }
}

TEST_CASE("chromatic number vertex budget") {
    Graph g = gen_cycle(12);
    CHECK(chromatic_number(g, 12) == 2);
    CHECK_THROWS_AS(chromatic_number(g, 11), budget_error);
    CHECK_THROWS_AS(chromatic_number(gen_cycle(11), 10), budget_error);
}

TEST_CASE("independence number fixtures") {
    CHECK(independence_number(gen_cycle(5)) == 2);
    CHECK(independence_number(gen_cycle(7)) == 3);
    CHECK(independence_number(gen_generalized_petersen(5, 2)) == 4);
    CHECK(independence_number(gen_complete(6)) == 1);
    CHECK(independence_number(gen_empty(9)) == 9);
    CHECK(independence_number(gen_kneser(5, 2)) == 4);
    CHECK(independence_number(gen_complete_multipartite({2, 2, 2})) == 2);
}

TEST_CASE("independence number matches brute force") {
    SplitMix64 rng(0xA17A0u);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(9));
        Graph g = oracle::random_graph(n, rng);
        CAPTURE(encode_graph6(g));
        CHECK(independence_number(g) == oracle::brute_alpha(g));
    }
}

TEST_CASE("kneser(7,3) independence number is 15") {
    // Erdos--Ko--Rado: alpha = C(6,2) = 15 for the (7,3) Kneser graph.
    CHECK(independence_number(gen_kneser(7, 3)) == 15);
}

}
