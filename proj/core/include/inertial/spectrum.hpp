#pragma once

#include <vector>

#include "inertial/graph.hpp"
#include "inertial/inertia.hpp"

namespace inertial {

/// Floating-point eigenvalues sorted descending, with the tolerance they
/// were computed at. Used by Hoffman-type bounds; all inertia verdicts go
/// through the exact integer path instead.
class Spectrum {
public:
    static Spectrum from_values(std::vector<double> values, double tol);

    const std::vector<double>& values() const { return values_; }
    double tol() const { return tol_; }
    int size() const { return static_cast<int>(values_.size()); }

private:
    Spectrum() = default;
    std::vector<double> values_;
    double tol_ = 0;
};

/// All adjacency eigenvalues via cyclic Jacobi rotations, iterated until
/// the off-diagonal Frobenius norm drops below tol * scale with scale the
/// maximum absolute row sum. Throws std::runtime_error if the 100-sweep
/// cap is hit (that is a bug, not an input condition).
Spectrum numeric_spectrum(const Graph& g, double tol = 1e-9);

/// Counts of eigenvalues above +threshold / below -threshold / between.
Inertia sign_counts(const Spectrum& s, double threshold);

}  // namespace inertial
