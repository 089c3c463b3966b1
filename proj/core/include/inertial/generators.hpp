#pragma once

#include <initializer_list>
#include <span>

#include "inertial/graph.hpp"

namespace inertial {

Graph gen_empty(int n);
Graph gen_complete(int n);
Graph gen_cycle(int n);  // n >= 3
Graph gen_path(int n);

/// Complete multipartite graph; parts[i] >= 1. Vertices are grouped by
/// part in the given order, edges join distinct parts.
Graph gen_complete_multipartite(std::span<const int> parts);

inline Graph gen_complete_multipartite(std::initializer_list<int> parts) {
    return gen_complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

/// Kneser graph K_{p,k}: vertices are the k-subsets of {0..p-1} in
/// lexicographic order, adjacent iff disjoint. Requires p >= 2k >= 2.
Graph gen_kneser(int p, int k);

/// Generalized Petersen GP(n,k): outer cycle u_0..u_{n-1}, inner vertices
/// v_i = n+i with v_i ~ v_{i+k mod n}, spokes u_i ~ v_i. 1 <= k < n/2.
Graph gen_generalized_petersen(int n, int k);

/// Two disjoint K_n joined by a single bridge edge; 2n vertices, n >= 3.
Graph gen_barbell(int n);

}  // namespace inertial
