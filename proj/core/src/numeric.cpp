#include "inertial/numeric.hpp"

namespace inertial {

std::string to_fraction_string(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    // integer division truncates toward zero; fix up negatives
    if (q * denominator(r) != numerator(r) && numerator(r) < 0) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) != numerator(r) && numerator(r) > 0) ++q;
    return q;
}

}  // namespace inertial
