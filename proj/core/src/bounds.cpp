#include "inertial/bounds.hpp"

#include <stdexcept>

namespace inertial {

Rational inertial_bound(const Inertia& i) {
    if (i.n_plus < 1 || i.n_minus < 1)
        throw std::invalid_argument("inertial bound undefined for edgeless graphs (n+ or n- is 0)");
    const Rational a(i.n_plus, i.n_minus);
    const Rational b(i.n_minus, i.n_plus);
    return 1 + (a > b ? a : b);
}

bool inertia_cap_check(const Inertia& i, int chi) {
    if (chi < 1) throw std::invalid_argument("chi must be >= 1");
    if (i.order() < 1) throw std::invalid_argument("empty inertia");
    const int big = i.n_plus > i.n_minus ? i.n_plus : i.n_minus;
    return Rational(big) <= Rational(static_cast<long long>(i.order()) * (chi - 1), chi);
}

double hoffman_bound(const Spectrum& s) {
    if (s.size() < 1) throw std::invalid_argument("empty spectrum");
    const double mu1 = s.values().front();
    const double mun = s.values().back();
    if (mun >= 0)
        throw std::invalid_argument("hoffman bound needs mu_n < 0 (at least one edge)");
    return 1 + mu1 / -mun;
}

int hoffman_full_chi(const Spectrum& s, double tol) {
    const int n = s.size();
    if (n < 2) throw std::invalid_argument("spectrum too small (graph needs an edge)");
    const auto& mu = s.values();
    double acc = mu[0];
    for (int c = 2; c <= n; ++c) {
        acc += mu[static_cast<std::size_t>(n - c + 1)];  // the (c-1)-th smallest
        if (acc <= tol) return c;
    }
    return n;  // trace is 0, so only rounding noise can land here
}

Rational chif_nonsingular_bound(const Inertia& i) {
    if (i.n_zero != 0)
        throw std::invalid_argument("nonsingular bound requires n0 = 0");
    if (i.n_plus < 1 || i.n_minus < 1)
        throw std::invalid_argument("bound undefined for edgeless graphs");
    return Rational(i.order(), i.n_plus < i.n_minus ? i.n_plus : i.n_minus);
}

}  // namespace inertial
