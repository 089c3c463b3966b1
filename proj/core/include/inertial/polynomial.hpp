#pragma once

#include <string>
#include <vector>

#include "inertial/numeric.hpp"

namespace inertial {

/// Monic polynomial with arbitrary-precision integer coefficients,
/// stored ascending: coeff(i) multiplies x^i.
class IntPolynomial {
public:
    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt operator()(const BigInt& x) const;

    /// e.g. "x^3 - 3*x - 2"
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
};

}  // namespace inertial
