#include "inertial/srg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace inertial {

namespace {

// integer square root when exact, -1 otherwise
long long perfect_sqrt(long long d) {
    if (d < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(d)));
    while (r * r > d) --r;
    while ((r + 1) * (r + 1) <= d) ++r;
    return r * r == d ? r : -1;
}

struct Multiplicities {
    long long f, g;
};

Multiplicities multiplicities_unchecked(const SrgParams& p) {
    const long long diff = p.lambda - p.mu;
    const long long d = diff * diff + 4 * (p.k - p.mu);
    if (d <= 0) throw std::invalid_argument("infeasible SRG: discriminant must be positive");
    const long long trace_term = 2 * p.k + (p.n - 1) * diff;
    if (trace_term == 0) {
        // conference case: sqrt(D) may be irrational, but f = g = (n-1)/2
        if ((p.n - 1) % 2 != 0)
            throw std::invalid_argument("infeasible SRG: conference parameters need odd n");
        const long long half = (p.n - 1) / 2;
        return {half, half};
    }
    const long long root = perfect_sqrt(d);
    if (root < 0)
        throw std::invalid_argument(
            "infeasible SRG: irrational discriminant with nonzero trace term");
    if (trace_term % root != 0 || ((p.n - 1) - trace_term / root) % 2 != 0)
        throw std::invalid_argument("infeasible SRG: multiplicities are not integers");
    const long long f = ((p.n - 1) - trace_term / root) / 2;
    const long long g = ((p.n - 1) + trace_term / root) / 2;
    if (f < 0 || g < 0)
        throw std::invalid_argument("infeasible SRG: negative multiplicity");
    return {f, g};
}

}  // namespace

void validate_srg(const SrgParams& p) {
    if (p.n < 2 || p.k < 1 || p.lambda < 0 || p.mu < 1)
        throw std::invalid_argument("infeasible SRG: parameter ranges");
    if (p.k >= p.n) throw std::invalid_argument("infeasible SRG: k must be < n");
    if (p.lambda > p.k - 1)
        throw std::invalid_argument("infeasible SRG: lambda exceeds k-1");
    if (p.mu > p.k) throw std::invalid_argument("infeasible SRG: mu exceeds k");
    const long long num = p.k * (p.k - 1 - p.lambda);
    if (num % p.mu != 0 || p.n != 1 + p.k + num / p.mu)
        throw std::invalid_argument("infeasible SRG: vertex identity fails");
    multiplicities_unchecked(p);  // integrality of f, g
}

std::pair<long long, long long> srg_multiplicities(const SrgParams& p) {
    validate_srg(p);
    const auto m = multiplicities_unchecked(p);
    return {m.f, m.g};
}

SrgParams srg_complement_params(const SrgParams& p) {
    validate_srg(p);
    SrgParams c{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
    validate_srg(c);
    return c;
}

Inertia srg_inertia(const SrgParams& p) {
    validate_srg(p);
    const auto m = multiplicities_unchecked(p);
    // r = ((lambda-mu) + sqrt(D))/2 is positive iff k > mu, zero iff k = mu
    if (p.k > p.mu)
        return Inertia{static_cast<int>(1 + m.f), 0, static_cast<int>(m.g)};
    return Inertia{1, static_cast<int>(m.f), static_cast<int>(m.g)};
}

Rational srg_chif_lower(const SrgParams& p) {
    validate_srg(p);
    if (p.k == p.mu)
        throw std::invalid_argument("chi_f lower form requires a nonsingular SRG (r > 0)");
    const auto m = multiplicities_unchecked(p);
    const Rational a(p.n, m.g);
    const Rational b(p.n, 1 + m.f);
    return a > b ? a : b;
}

Mu2OnePrediction mu2one_predicted_nplus(long long n, long long lambda, long long mu) {
    const long long den = 2 - lambda + mu;
    if (den == 0) throw std::invalid_argument("mu2one form: zero denominator 2 - lambda + mu");
    Mu2OnePrediction out;
    out.n_plus = Rational(n) - Rational(n - lambda + 2 * mu, den);
    out.k = 1 - lambda + 2 * mu;
    return out;
}

long long conjecture2_bound(long long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return n - (8 * (n - 1)) / (8 + n);
}

long long taylor_nplus(long long q) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("taylor family needs odd q >= 3");
    return q * q * q - q * q + q;
}

}  // namespace inertial
