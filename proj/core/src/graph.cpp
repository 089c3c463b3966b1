#include "inertial/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace inertial {

Graph::Graph(int order, std::string name)
    : order_(order), words_per_row_((order + 63) / 64),
      bits_(static_cast<std::size_t>(order) * words_per_row_, 0),
      name_(std::move(name)) {
    if (order < 1) throw std::invalid_argument("graph order must be >= 1");
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] |= 1ULL << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_per_row_ + u / 64] |= 1ULL << (u % 64);
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges,
                        std::string name) {
    Graph g(order, std::move(name));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        g.set_edge(u, v);
    }
    return g;
}

Graph Graph::edgeless(int order, std::string name) {
    return Graph(order, std::move(name));
}

bool Graph::has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >>
            (v % 64)) & 1ULL;
}

int Graph::edge_count() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return static_cast<int>(total / 2);
}

int Graph::degree(int v) const {
    int d = 0;
    const std::size_t base = static_cast<std::size_t>(v) * words_per_row_;
    for (int w = 0; w < words_per_row_; ++w) d += std::popcount(bits_[base + w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < order_; ++u)
        if (has_edge(v, u)) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::named(std::string new_name) const {
    Graph g = *this;
    g.name_ = std::move(new_name);
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.order_, g.name_.empty() ? std::string{} : "co-" + g.name_);
    for (int u = 0; u < g.order_; ++u)
        for (int v = u + 1; v < g.order_; ++v)
            if (!g.has_edge(u, v)) out.set_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order_ + h.order_, {});
    for (int u = 0; u < g.order_; ++u)
        for (int v = u + 1; v < g.order_; ++v)
            if (g.has_edge(u, v)) out.set_edge(u, v);
    const int shift = g.order_;
    for (int u = 0; u < h.order_; ++u)
        for (int v = u + 1; v < h.order_; ++v)
            if (h.has_edge(u, v)) out.set_edge(shift + u, shift + v);
    return out;
}

Graph relabeled(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order_)
        throw std::invalid_argument("permutation size does not match order");
    std::vector<bool> seen(g.order_, false);
    for (int p : perm) {
        if (p < 0 || p >= g.order_ || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    Graph out(g.order_, g.name_);
    for (int u = 0; u < g.order_; ++u)
        for (int v = u + 1; v < g.order_; ++v)
            if (g.has_edge(u, v)) out.set_edge(perm[u], perm[v]);
    return out;
}

}  // namespace inertial
