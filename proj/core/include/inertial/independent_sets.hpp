#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "inertial/budget.hpp"
#include "inertial/graph.hpp"

namespace inertial {

inline constexpr std::size_t kDefaultMisCap = 2'000'000;

/// All maximal independent sets of a graph, each as a vertex bitmask
/// (bit v set <=> vertex v in the set), sorted ascending as integers.
struct IndependentSetCollection {
    std::vector<std::uint64_t> sets;
};

/// Bron–Kerbosch with pivoting, run on the complement (maximal cliques
/// there are exactly the maximal independent sets here). Throws
/// budget_error when the collection would exceed `cap` or order > 64.
IndependentSetCollection maximal_independent_sets(const Graph& g,
                                                  std::size_t cap = kDefaultMisCap);

}  // namespace inertial
