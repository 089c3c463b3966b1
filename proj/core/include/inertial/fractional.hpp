#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "inertial/graph.hpp"
#include "inertial/independent_sets.hpp"
#include "inertial/numeric.hpp"

namespace inertial {

/// An optimal fractional colouring: chi_f as an exact rational, plus the
/// maximal independent sets carrying positive weight. Substituting back
/// covers every vertex with total weight >= 1 (exactly).
struct FractionalColoring {
    Rational value;
    std::vector<std::uint64_t> sets;  // vertex bitmasks, positive weight only
    std::vector<Rational> weights;    // parallel to sets
};

/// Exact optimum of  min sum_S x_S  s.t.  sum_{S contains v} x_S >= 1,
/// x >= 0, columns ranging over maximal independent sets. Solved by a
/// dense two-phase simplex on a fraction-free integer tableau (most
/// negative reduced cost entering, lexicographic ratio test for
/// termination). Throws budget_error via the set enumeration cap.
FractionalColoring fractional_coloring(const Graph& g, std::size_t cap = kDefaultMisCap);

Rational fractional_chromatic(const Graph& g, std::size_t cap = kDefaultMisCap);

}  // namespace inertial
