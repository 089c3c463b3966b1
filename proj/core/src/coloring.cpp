#include "inertial/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "inertial/bounds.hpp"
#include "inertial/inertia.hpp"
#include "inertial/numeric.hpp"
#include "inertial/spectrum.hpp"

namespace inertial {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return adj;
}

// clique grown greedily by degree (ties to the lowest index); a cheap
// chromatic lower bound and a symmetry-breaking seed for the search
std::vector<int> greedy_clique(const Graph& g, const std::vector<std::uint64_t>& adj) {
    const int n = g.order();
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    std::vector<int> clique{start};
    std::uint64_t cand = adj[static_cast<std::size_t>(start)];
    while (cand) {
        int pick = -1, best_deg = -1;
        for (std::uint64_t m = cand; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int d = std::popcount(adj[static_cast<std::size_t>(v)] & cand);
            if (d > best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        clique.push_back(pick);
        cand &= adj[static_cast<std::size_t>(pick)];
    }
    return clique;
}

struct ChiSearch {
    int n;
    const std::vector<std::uint64_t>& adj;
    std::vector<int> color;  // 1-based; 0 = uncolored
    std::uint64_t uncolored = 0;
    int best = 0;
    int lower = 1;
    bool finished = false;

    std::uint64_t forbidden(int v) const {
        std::uint64_t f = 0;
        for (std::uint64_t m = adj[static_cast<std::size_t>(v)] & ~uncolored; m;) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            f |= std::uint64_t{1} << (color[static_cast<std::size_t>(w)] - 1);
        }
        return f;
    }

    // DSATUR rule: highest saturation, then highest degree among the
    // uncolored, then lowest index
    int select() const {
        int pick = -1, best_sat = -1, best_deg = -1;
        for (std::uint64_t m = uncolored; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int sat = std::popcount(forbidden(v));
            const int deg = std::popcount(adj[static_cast<std::size_t>(v)] & uncolored);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_sat = sat;
                best_deg = deg;
                pick = v;
            }
        }
        return pick;
    }

    int greedy_upper() {
        std::vector<int> saved = color;
        const std::uint64_t saved_unc = uncolored;
        int used = 0;
        for (std::uint64_t m = ~uncolored & (n == 64 ? ~std::uint64_t{0}
                                                     : (std::uint64_t{1} << n) - 1);
             m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            used = std::max(used, color[static_cast<std::size_t>(v)]);
        }
        while (uncolored) {
            const int v = select();
            const std::uint64_t forb = forbidden(v);
            int c = 1;
            while ((forb >> (c - 1)) & 1) ++c;
            color[static_cast<std::size_t>(v)] = c;
            uncolored &= ~(std::uint64_t{1} << v);
            used = std::max(used, c);
        }
        color = std::move(saved);
        uncolored = saved_unc;
        return used;
    }

    void solve(int used) {
        if (finished || used >= best) return;
        if (!uncolored) {
            best = used;
            if (best <= lower) finished = true;
            return;
        }
        const int v = select();
        const std::uint64_t forb = forbidden(v);
        const int limit = std::min(used + 1, best - 1);
        for (int c = 1; c <= limit; ++c) {
            if ((forb >> (c - 1)) & 1) continue;
            color[static_cast<std::size_t>(v)] = c;
            uncolored &= ~(std::uint64_t{1} << v);
            solve(std::max(used, c));
            color[static_cast<std::size_t>(v)] = 0;
            uncolored |= std::uint64_t{1} << v;
            if (finished) return;
        }
    }
};

}  // namespace

int chromatic_number(const Graph& g, int vertex_budget) {
    const int n = g.order();
    if (n > vertex_budget || n > 64)
        throw budget_error("chromatic_number: order " + std::to_string(n) +
                           " exceeds budget " + std::to_string(std::min(vertex_budget, 64)));
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    const auto adj = adjacency_masks(g);
    const auto clique = greedy_clique(g, adj);

    ChiSearch search{n, adj, std::vector<int>(static_cast<std::size_t>(n), 0),
                     n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    // pre-colour the clique: its vertices need distinct colours anyway,
    // and fixing them breaks colour-permutation symmetry
    for (std::size_t i = 0; i < clique.size(); ++i) {
        search.color[static_cast<std::size_t>(clique[i])] = static_cast<int>(i) + 1;
        search.uncolored &= ~(std::uint64_t{1} << clique[i]);
    }
    search.lower = static_cast<int>(clique.size());
    search.best = search.greedy_upper();
    if (search.best > search.lower) {
        // exact inertial bound, then the multi-eigenvalue Hoffman bound;
        // both are valid chromatic lower bounds, used here for pruning
        const Rational ib = inertial_bound(inertia(g));
        search.lower = std::max(search.lower,
                                static_cast<int>(rational_ceil(ib).convert_to<long long>()));
        if (search.best > search.lower)
            search.lower = std::max(search.lower, hoffman_full_chi(numeric_spectrum(g)));
    }
    if (search.best <= search.lower) return search.best;

    search.solve(static_cast<int>(clique.size()));
    return search.best;
}

namespace {

struct AlphaSearch {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    void expand(std::uint64_t p, int size) {
        // dominance: a vertex with <= 1 neighbours left is always safe to take
        for (bool reduced = true; reduced && p;) {
            reduced = false;
            for (std::uint64_t m = p; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                const std::uint64_t nb = adj[static_cast<std::size_t>(v)] & p;
                if (std::popcount(nb) <= 1) {
                    p &= ~(nb | (std::uint64_t{1} << v));
                    ++size;
                    reduced = true;
                    break;
                }
            }
        }
        if (size + std::popcount(p) <= best) return;
        if (!p) {
            best = size;
            return;
        }
        int v = -1, best_deg = -1;
        for (std::uint64_t m = p; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            const int d = std::popcount(adj[static_cast<std::size_t>(u)] & p);
            if (d > best_deg) {
                best_deg = d;
                v = u;
            }
        }
        expand(p & ~(adj[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v)), size + 1);
        expand(p & ~(std::uint64_t{1} << v), size);
    }
};

}  // namespace

int independence_number(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw budget_error("independence_number: order exceeds 64");
    if (n == 0) return 0;
    const auto adj = adjacency_masks(g);
    AlphaSearch search{adj};
    search.expand(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
    return search.best;
}

}  // namespace inertial
