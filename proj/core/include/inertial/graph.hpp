#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace inertial {

/// Simple undirected graph: order plus a symmetric bit-adjacency matrix.
/// Vertices are 0-indexed. Instances are immutable once constructed; the
/// operations below return new graphs, so values are safe to share across
/// threads.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate edges collapse; an
    /// out-of-range endpoint or a self-loop throws std::invalid_argument.
    static Graph from_edges(int order, std::span<const std::pair<int, int>> edges,
                            std::string name = {});

    static Graph edgeless(int order, std::string name = {});

    int order() const { return order_; }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    const std::string& name() const { return name_; }
    /// Same adjacency under a different label.
    Graph named(std::string new_name) const;

    /// Adjacency equality; names are labels, not identity.
    bool operator==(const Graph& other) const {
        return order_ == other.order_ && bits_ == other.bits_;
    }

    friend Graph complement(const Graph& g);
    friend Graph disjoint_union(const Graph& g, const Graph& h);
    friend Graph relabeled(const Graph& g, std::span<const int> perm);

private:
    explicit Graph(int order, std::string name);
    void set_edge(int u, int v);

    int order_;
    int words_per_row_;
    std::vector<std::uint64_t> bits_;  // row-major packed rows
    std::string name_;
};

/// Edge {u,v} present iff absent in g. An involution.
Graph complement(const Graph& g);

/// Block-diagonal union; h's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertex v of g becomes perm[v]; perm must be a permutation of 0..order-1.
Graph relabeled(const Graph& g, std::span<const int> perm);

}  // namespace inertial
