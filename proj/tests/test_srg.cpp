#include <doctest.h>

#include <stdexcept>

#include "inertial/generators.hpp"
#include "inertial/inertia.hpp"
#include "inertial/srg.hpp"
#include "oracles.hpp"

using namespace inertial;

TEST_SUITE("srg") {

TEST_CASE("multiplicities") {
    CHECK(srg_multiplicities({10, 3, 0, 1}) == std::pair<long long, long long>{5, 4});
    CHECK(srg_multiplicities({16, 5, 0, 2}) == std::pair<long long, long long>{10, 5});
    CHECK(srg_multiplicities({5, 2, 0, 1}) == std::pair<long long, long long>{2, 2});
    CHECK(srg_multiplicities({6, 4, 2, 4}) == std::pair<long long, long long>{3, 2});
    CHECK(srg_multiplicities({15, 8, 4, 4}) == std::pair<long long, long long>{5, 9});
    // 1 + f + g = n
    for (SrgParams p : {SrgParams{10, 3, 0, 1}, SrgParams{16, 5, 0, 2}, SrgParams{5, 2, 0, 1},
                        SrgParams{13, 6, 2, 3}, SrgParams{50, 7, 0, 1}}) {
        const auto [f, g] = srg_multiplicities(p);
        CHECK(1 + f + g == p.n);
    }
}

TEST_CASE("infeasible parameters are rejected") {
    CHECK_THROWS_AS(srg_multiplicities({10, 3, 0, 2}), std::invalid_argument);  // identity fails
    CHECK_THROWS_AS(srg_multiplicities({12, 5, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(srg_multiplicities({10, 3, 4, 1}), std::invalid_argument);  // lambda > k-1
    CHECK_THROWS_AS(srg_multiplicities({8, 3, 0, 4}), std::invalid_argument);   // mu > k
    CHECK_THROWS_AS(srg_multiplicities({6, 2, 0, 1}), std::invalid_argument);   // identity fails
    // irrational discriminant with nonzero trace term
    CHECK_THROWS_AS(srg_multiplicities({19, 6, 1, 2}), std::invalid_argument);
}

TEST_CASE("complement parameters") {
    CHECK(srg_complement_params({10, 3, 0, 1}) == SrgParams{10, 6, 3, 4});
    CHECK(srg_complement_params({5, 2, 0, 1}) == SrgParams{5, 2, 0, 1});  // pentagon
    for (SrgParams p : {SrgParams{10, 3, 0, 1}, SrgParams{16, 5, 0, 2}, SrgParams{13, 6, 2, 3},
                        SrgParams{9, 4, 1, 2}})
        CHECK(srg_complement_params(srg_complement_params(p)) == p);
    // f and g swap under complement
    for (SrgParams p : {SrgParams{10, 3, 0, 1}, SrgParams{16, 5, 0, 2}, SrgParams{9, 4, 1, 2}}) {
        const auto [f, g] = srg_multiplicities(p);
        const auto [fc, gc] = srg_multiplicities(srg_complement_params(p));
        CHECK(f == gc);
        CHECK(g == fc);
    }
}

TEST_CASE("srg_inertia") {
    CHECK(srg_inertia({10, 3, 0, 1}) == Inertia{6, 0, 4});
    CHECK(srg_inertia({16, 5, 0, 2}) == Inertia{11, 0, 5});
    CHECK(srg_inertia({5, 2, 0, 1}) == Inertia{3, 0, 2});
    // r = 0 when k = mu: zero eigenvalue with multiplicity f
    CHECK(srg_inertia({6, 4, 2, 4}) == Inertia{1, 3, 2});
}

TEST_CASE("srg_inertia agrees with exact inertia on constructed graphs") {
    CHECK(srg_inertia({10, 3, 0, 1}) == inertia(gen_kneser(5, 2)));
    CHECK(srg_inertia({5, 2, 0, 1}) == inertia(gen_cycle(5)));
    const std::vector<int> parts{2, 2, 2};
    Graph k222 = gen_complete_multipartite(parts);
    REQUIRE(oracle::is_srg(k222, 6, 4, 2, 4));
    CHECK(srg_inertia({6, 4, 2, 4}) == inertia(k222));
    // complement side: SRG(10,6,3,4) vs complement of Petersen
    CHECK(srg_inertia({10, 6, 3, 4}) == inertia(complement(gen_kneser(5, 2))));
}

TEST_CASE("corollary 4 sums via formulas") {
    for (SrgParams p : {SrgParams{10, 3, 0, 1}, SrgParams{16, 5, 0, 2}, SrgParams{13, 6, 2, 3},
                        SrgParams{9, 4, 1, 2}, SrgParams{5, 2, 0, 1}}) {
        const Inertia a = srg_inertia(p);
        const Inertia b = srg_inertia(srg_complement_params(p));
        if (a.n_zero != 0 || b.n_zero != 0) continue;  // Corollary 4 needs nonsingular
        CHECK(a.n_plus + b.n_plus == p.n + 1);
        CHECK(a.n_minus + b.n_minus == p.n - 1);
    }
}

TEST_CASE("srg_chif_lower") {
    CHECK(srg_chif_lower({10, 3, 0, 1}) == Rational(5, 2));
    CHECK(srg_chif_lower({5, 2, 0, 1}) == Rational(5, 2));
    CHECK(srg_chif_lower({16, 5, 0, 2}) == Rational(16, 5));
    CHECK_THROWS_AS(srg_chif_lower({6, 4, 2, 4}), std::invalid_argument);  // r = 0
}

TEST_CASE("mu2 = 1 closed form") {
    const auto pet = mu2one_predicted_nplus(10, 0, 1);
    CHECK(pet.n_plus == Rational(6));
    CHECK(pet.k == 3);
    const auto clebsch = mu2one_predicted_nplus(16, 0, 2);
    CHECK(clebsch.n_plus == Rational(11));
    CHECK(clebsch.k == 5);
    const auto c5 = mu2one_predicted_nplus(5, 0, 1);
    CHECK(c5.n_plus == Rational(8, 3));  // non-integral: C5 has mu_2 != 1
    CHECK_THROWS_AS(mu2one_predicted_nplus(10, 4, 2), std::invalid_argument);
}

TEST_CASE("conjecture2_bound") {
    CHECK(conjecture2_bound(10) == 6);
    CHECK(conjecture2_bound(16) == 11);
    CHECK(conjecture2_bound(5) == 3);
    CHECK(conjecture2_bound(1) == 1);
    CHECK_THROWS_AS(conjecture2_bound(0), std::invalid_argument);
}

TEST_CASE("taylor family n+") {
    CHECK(taylor_nplus(3) == 21);
    CHECK(taylor_nplus(5) == 105);
    for (long long q : {3LL, 5LL, 7LL, 9LL}) {
        CHECK(taylor_nplus(q) == 1 + (q - 1) * (q * q + 1));
        // n + n^(1/3) - n^(2/3) with n = q^3
        CHECK(taylor_nplus(q) == q * q * q + q - q * q);
    }
    CHECK_THROWS_AS(taylor_nplus(4), std::invalid_argument);
    CHECK_THROWS_AS(taylor_nplus(1), std::invalid_argument);
}

}  // TEST_SUITE
