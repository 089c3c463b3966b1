#pragma once

#include <utility>

#include "inertial/inertia.hpp"
#include "inertial/numeric.hpp"

namespace inertial {

/// Parameter tuple of a strongly regular graph SRG(n, k, lambda, mu) with
/// spectrum (k^1, r^f, s^g). All arithmetic on these is exact; square
/// roots are only taken when the discriminant is a perfect square or the
/// conference-graph special case applies.
struct SrgParams {
    long long n = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;

    bool operator==(const SrgParams&) const = default;
};

/// Throws std::invalid_argument if parameters are infeasible. Feasibility
/// here means: basic ranges, mu <= k, lambda <= k-1, the vertex identity
/// n = 1 + k + k(k-1-lambda)/mu with exact divisibility, and integral
/// non-negative multiplicities. No Krein or absolute-bound conditions.
void validate_srg(const SrgParams& p);

/// Eigenvalue multiplicities (f, g) of r and s, computed exactly from the
/// closed forms with discriminant D = (lambda-mu)^2 + 4(k-mu). Conference
/// parameters (trace term zero, D possibly non-square) fall back to
/// f = g = (n-1)/2. Infeasible parameter sets throw.
std::pair<long long, long long> srg_multiplicities(const SrgParams& p);

/// Complement parameter tuple (n, n-k-1, n-2k+mu-2, n-2k+lambda).
/// An involution; the result is validated.
SrgParams srg_complement_params(const SrgParams& p);

/// Predicted inertia from the closed forms: (1+f, 0, g) when r > 0
/// (equivalently k > mu), (1, f, g) when r = 0 (k = mu).
Inertia srg_inertia(const SrgParams& p);

/// max(n/g, n/(1+f)), the fractional-chromatic lower bound; requires a
/// nonsingular SRG (r > 0).
Rational srg_chif_lower(const SrgParams& p);

struct Mu2OnePrediction {
    Rational n_plus;    // n - (n - lambda + 2 mu)/(2 - lambda + mu)
    long long k = 0;    // companion degree 1 - lambda + 2 mu
};

/// Closed form for n+ when the second eigenvalue equals 1. Not gated on
/// feasibility; a non-integral result signals parameters that cannot have
/// mu_2 = 1. Throws when 2 - lambda + mu = 0.
Mu2OnePrediction mu2one_predicted_nplus(long long n, long long lambda, long long mu);

/// n - floor(8(n-1)/(8+n)), the conjectured cap on n+. n >= 1.
long long conjecture2_bound(long long n);

/// n+ of the Taylor-family graph on q^3 vertices: q^3 - q^2 + q, q >= 3 odd.
long long taylor_nplus(long long q);

}  // namespace inertial
