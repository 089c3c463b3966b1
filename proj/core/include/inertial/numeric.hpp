#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace inertial {

// Arbitrary-precision integer. Characteristic polynomial coefficients at
// order 40+ overflow any fixed width, so everything exact runs on these.
using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, kept in lowest terms with a positive denominator by the
// backing type. All bound values and LP arithmetic use this.
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

BigInt rational_ceil(const Rational& r);
BigInt rational_floor(const Rational& r);

}  // namespace inertial
