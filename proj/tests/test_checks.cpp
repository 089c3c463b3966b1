#include "doctest.h"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inertial/checks.hpp"
#include "inertial/generators.hpp"
#include "inertial/graph.hpp"
#include "inertial/graph6.hpp"
#include "inertial/numeric.hpp"
#include "inertial/rng.hpp"
#include "inertial/spectrum.hpp"
#include "oracles.hpp"

using namespace inertial;

namespace {

Graph wheel5() {
    // C5 plus a hub adjacent to everything.
    std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                          {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    return Graph::from_edges(6, e, "W5");
}

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("claim names round trip") {
    CHECK(to_string(ClaimId::theorem1) == "THEOREM1");
    CHECK(to_string(ClaimId::corollary3) == "COROLLARY3");
    CHECK(to_cli_string(ClaimId::conjecture2) == "conjecture2");
    for (ClaimId id : kAllClaims) {
        CHECK(claim_from_string(to_string(id)) == id);
        CHECK(claim_from_string(to_cli_string(id)) == id);
    }
    CHECK(claim_from_string("Theorem3") == ClaimId::theorem3);
    CHECK(claim_from_string("lemma9") == std::nullopt);
    CHECK(claim_from_string("") == std::nullopt);
}

TEST_CASE("verdict printing") {
    CHECK(to_string(Verdict{VerdictKind::holds, {}}) == "HOLDS");
    CHECK(to_string(Verdict{VerdictKind::holds_with_equality, {}}) == "HOLDS_WITH_EQUALITY");
    CHECK(to_string(Verdict{VerdictKind::violated, "why"}) == "VIOLATED(why)");
    CHECK(to_string(Verdict{VerdictKind::skipped, "edgeless"}) == "SKIPPED(edgeless)");
}

TEST_CASE("theorem1 verdicts") {
    CHECK(check_theorem1(gen_cycle(5)).kind == VerdictKind::holds);
    CHECK(check_theorem1(gen_generalized_petersen(5, 2)).kind == VerdictKind::holds);
    // bound 1 + 2/1 = 3 = chi for K_{1,2,3}; 1 + 8/2 = 5 = chi for barbell(5)
    CHECK(check_theorem1(gen_complete_multipartite({1, 2, 3})).kind ==
          VerdictKind::holds_with_equality);
    CHECK(check_theorem1(gen_barbell(5)).kind == VerdictKind::holds_with_equality);
    CHECK(check_theorem1(gen_empty(4)) == Verdict{VerdictKind::skipped, "edgeless"});
}

TEST_CASE("theorem1 chi budget skip") {
    CheckConfig cfg;
    cfg.chi_vertex_budget = 4;
    CHECK(check_theorem1(gen_cycle(5), cfg) == Verdict{VerdictKind::skipped, "chi budget"});
}

TEST_CASE("corollary1 verdicts") {
    CHECK(check_corollary1(gen_complete(4)).kind == VerdictKind::holds_with_equality);
    CHECK(check_corollary1(gen_cycle(5)).kind == VerdictKind::holds);
    CHECK(check_corollary1(gen_generalized_petersen(5, 2)).kind == VerdictKind::holds);
    CHECK(check_corollary1(gen_empty(2)) == Verdict{VerdictKind::skipped, "edgeless"});
}

TEST_CASE("conjecture1 verdicts") {
    CHECK(check_conjecture1(gen_kneser(5, 2)).kind == VerdictKind::holds_with_equality);
    CHECK(check_conjecture1(gen_cycle(7)).kind == VerdictKind::holds_with_equality);
    // wheel: bound 2 while chi_f = 7/2
    CHECK(check_conjecture1(wheel5()).kind == VerdictKind::holds);
    CHECK(check_conjecture1(gen_empty(4)) == Verdict{VerdictKind::skipped, "edgeless"});
}

TEST_CASE("conjecture1 budget skips") {
    CheckConfig cfg;
    cfg.chif_order_budget = 4;
    CHECK(check_conjecture1(gen_cycle(5), cfg) ==
          Verdict{VerdictKind::skipped, "chi_f budget"});

    Graph blowup = gen_complete(3);
    for (int i = 0; i < 4; ++i) blowup = disjoint_union(blowup, gen_complete(3));
    CheckConfig tiny;
    tiny.mis_cap = 10;  // 3^5 maximal independent sets exceed this
    CHECK(check_conjecture1(blowup, tiny) == Verdict{VerdictKind::skipped, "mis cap"});
}

TEST_CASE("nordhaus-gaddum verdicts") {
    CHECK(check_nordhaus_gaddum(gen_generalized_petersen(5, 2)).kind == VerdictKind::holds);
    CHECK(check_nordhaus_gaddum(gen_cycle(5)).kind == VerdictKind::holds);
    CHECK(check_nordhaus_gaddum(gen_empty(5)).kind == VerdictKind::holds);
    CHECK(check_nordhaus_gaddum(gen_complete(5)).kind == VerdictKind::holds);
    CHECK(check_nordhaus_gaddum(gen_path(4)).kind == VerdictKind::holds);
    CHECK(check_nordhaus_gaddum(gen_empty(1)) == Verdict{VerdictKind::skipped, "order 1"});
}

TEST_CASE("conjecture2 verdicts") {
    // cap: n - floor(8(n-1)/(8+n)); 10 -> 6, 5 -> 3, 6 -> 4
    CHECK(check_conjecture2(gen_generalized_petersen(5, 2)).kind ==
          VerdictKind::holds_with_equality);
    CHECK(check_conjecture2(disjoint_union(gen_cycle(5), gen_cycle(5))).kind ==
          VerdictKind::holds_with_equality);
    CHECK(check_conjecture2(gen_cycle(5)).kind == VerdictKind::holds_with_equality);
    CHECK(check_conjecture2(gen_complete(6)).kind == VerdictKind::holds);
    CHECK(check_conjecture2(gen_empty(5)).kind == VerdictKind::holds);
}

TEST_CASE("corollary3 verdicts") {
    CHECK(check_corollary3(gen_complete(3), 50, 1).kind == VerdictKind::holds);
    CHECK(check_corollary3(gen_cycle(5), 25, 7).kind == VerdictKind::holds);
    CHECK(check_corollary3(gen_empty(3), 10, 0) == Verdict{VerdictKind::skipped, "edgeless"});
    // deterministic in (graph, seed)
    CHECK(check_corollary3(gen_cycle(5), 25, 7) == check_corollary3(gen_cycle(5), 25, 7));
}

TEST_CASE("corollary3 sweeps all graphs up to order 4") {
    for (int n = 2; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 1; code < (1ull << pairs); ++code) {
            std::vector<std::pair<int, int>> edges;
            int k = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++k)
                    if (code >> k & 1u) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            CAPTURE(encode_graph6(g));
            CHECK(check_corollary3(g, 40, 0).kind == VerdictKind::holds);
        }
    }
}

TEST_CASE("check_graph aggregates shared work") {
    CheckConfig cfg;
    cfg.corollary3_trials = 10;
    std::vector<ClaimId> claims(kAllClaims.begin(), kAllClaims.end());
    Graph pet = gen_generalized_petersen(5, 2);
    GraphCheckResult r = check_graph(pet, claims, cfg);

    CHECK(r.inertia == Inertia{6, 0, 4});
    REQUIRE(r.chi.has_value());
    CHECK(*r.chi == 3);
    REQUIRE(r.chi_f.has_value());
    CHECK(*r.chi_f == Rational(5, 2));
    REQUIRE(r.verdicts.size() == claims.size());
    CHECK(r.verdicts.at(ClaimId::theorem1).kind == VerdictKind::holds);
    CHECK(r.verdicts.at(ClaimId::corollary1).kind == VerdictKind::holds);
    CHECK(r.verdicts.at(ClaimId::conjecture1).kind == VerdictKind::holds_with_equality);
    CHECK(r.verdicts.at(ClaimId::theorem3).kind == VerdictKind::holds);
    CHECK(r.verdicts.at(ClaimId::conjecture2).kind == VerdictKind::holds_with_equality);
    CHECK(r.verdicts.at(ClaimId::corollary3).kind == VerdictKind::holds);
}

TEST_CASE("check_graph fills columns only when needed") {
    GraphCheckResult r = check_graph(gen_cycle(5), {ClaimId::theorem3}, {});
    CHECK_FALSE(r.chi.has_value());
    CHECK_FALSE(r.chi_f.has_value());
    CHECK(r.verdicts.size() == 1);

    // chi is still reported for an edgeless graph even though the bound
    // claims skip it
    GraphCheckResult e = check_graph(gen_empty(3), {ClaimId::theorem1}, {});
    REQUIRE(e.chi.has_value());
    CHECK(*e.chi == 1);
    CHECK(e.verdicts.at(ClaimId::theorem1) == Verdict{VerdictKind::skipped, "edgeless"});
}

TEST_CASE("check_graph on the one-vertex graph") {
    std::vector<ClaimId> claims(kAllClaims.begin(), kAllClaims.end());
    GraphCheckResult r = check_graph(gen_empty(1), claims, {});
    CHECK(r.inertia == Inertia{0, 1, 0});
    CHECK(r.verdicts.at(ClaimId::theorem3) == Verdict{VerdictKind::skipped, "order 1"});
    CHECK(r.verdicts.at(ClaimId::theorem1).kind == VerdictKind::skipped);
    CHECK(r.verdicts.at(ClaimId::conjecture2).kind == VerdictKind::holds);
}

TEST_CASE("complement spectra satisfy the Courant-Weyl inequalities") {
    // mu_i(G) + mu_{n-i+2}(co-G) <= -1 for i >= 2; numeric sanity behind
    // the Nordhaus-Gaddum check.
    SplitMix64 rng(0xC0117u);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.below(9));
        Graph g = oracle::random_graph(n, rng);
        auto gv = numeric_spectrum(g).values();
        auto hv = numeric_spectrum(complement(g)).values();
        for (int i = 2; i <= n; ++i) {
            CAPTURE(encode_graph6(g));
            CHECK(gv[i - 1] + hv[n - i + 1] <= -1 + 1e-6);
        }
    }
}

}
