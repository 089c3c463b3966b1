#include "inertial/independent_sets.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace inertial {

namespace {

struct BkState {
    const std::vector<std::uint64_t>& adj;  // complement adjacency masks
    std::size_t cap;
    std::vector<std::uint64_t> out;

    void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            if (out.size() >= cap)
                throw budget_error("maximal independent set cap exceeded (cap=" +
                                   std::to_string(cap) + ")");
            out.push_back(r);
            return;
        }
        // pivot: vertex of P|X covering the most of P
        std::uint64_t px = p | x;
        int pivot = -1, best = -1;
        for (std::uint64_t m = px; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int cover = std::popcount(p & adj[v]);
            if (cover > best) {
                best = cover;
                pivot = v;
            }
        }
        for (std::uint64_t cand = p & ~adj[pivot]; cand;) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            const std::uint64_t bit = std::uint64_t{1} << v;
            expand(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

}  // namespace

IndependentSetCollection maximal_independent_sets(const Graph& g, std::size_t cap) {
    const int n = g.order();
    if (n > 64) throw budget_error("independent set enumeration needs order <= 64");

    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> co_adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && !g.has_edge(u, v)) row |= std::uint64_t{1} << u;
        co_adj[static_cast<std::size_t>(v)] = row & full;
    }

    BkState state{co_adj, cap, {}};
    state.expand(0, full, 0);
    std::sort(state.out.begin(), state.out.end());

    IndependentSetCollection coll;
    coll.sets = std::move(state.out);
    return coll;
}

}  // namespace inertial
