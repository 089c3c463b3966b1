#pragma once

#include <string>
#include <vector>

#include "inertial/graph.hpp"
#include "inertial/numeric.hpp"
#include "inertial/polynomial.hpp"

namespace inertial {

/// Eigenvalue sign counts (n+, n0, n-) of a symmetric matrix, computed
/// exactly. n_plus + n_zero + n_minus equals the matrix order.
struct Inertia {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;

    int order() const { return n_plus + n_zero + n_minus; }
    bool operator==(const Inertia&) const = default;
};

std::string to_string(const Inertia& i);  // "(3, 0, 2)"

/// Symmetric matrix of exact rationals with a zero diagonal — the real
/// restriction of the weight matrices admitted by the weighted bound.
class RationalSymMatrix {
public:
    explicit RationalSymMatrix(int order);

    /// Validates symmetry and the zero diagonal.
    static RationalSymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int order() const { return order_; }
    const Rational& at(int i, int j) const;
    void set(int i, int j, const Rational& value);  // i != j; sets both triangles

private:
    int order_;
    std::vector<Rational> entries_;
};

/// Characteristic polynomial det(xI - cM), where c is the positive LCM of
/// the entry denominators (positive scaling preserves inertia). Exact
/// integer coefficients via the division-free Berkowitz algorithm.
IntPolynomial char_poly(const RationalSymMatrix& m);
IntPolynomial char_poly(const Graph& g);

/// Sign counts by Descartes' rule, exact for polynomials with all-real
/// roots: n0 = multiplicity of the root 0, n+ = sign variations of the
/// deflated polynomial, n- = the rest.
Inertia inertia_from_charpoly(const IntPolynomial& p);

/// Exact inertia of the adjacency matrix. No tolerances anywhere.
Inertia inertia(const Graph& g);

/// Exact inertia of a weight matrix constrained to the edge pattern:
/// w[k][l] != 0 is allowed only where pattern has the edge {k,l}.
/// A nonzero entry elsewhere throws std::invalid_argument.
Inertia inertia_weighted(const RationalSymMatrix& w, const Graph& pattern);

}  // namespace inertial
