#pragma once

#include "inertial/budget.hpp"
#include "inertial/graph.hpp"

namespace inertial {

/// Exact chromatic number. Lower bound seeded by a greedily grown clique
/// (tightened by the inertial and Hoffman bounds when a gap remains),
/// upper bound by a DSATUR greedy run, then DSATUR branch-and-bound
/// closes the gap. Throws budget_error when order > vertex_budget.
int chromatic_number(const Graph& g, int vertex_budget = 64);

/// Exact independence number by branch-and-bound over vertex bitmasks
/// (order <= 64), with degree-0/1 dominance reductions.
int independence_number(const Graph& g);

}  // namespace inertial
