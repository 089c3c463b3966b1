#pragma once

#include "inertial/inertia.hpp"
#include "inertial/numeric.hpp"
#include "inertial/spectrum.hpp"

namespace inertial {

// These take Inertia/Spectrum values rather than graphs so that spectrum
// fixtures from the literature can be evaluated without constructing the
// graph. Edgeless inputs are rejected, not given a sentinel value.

/// 1 + max(n+/n-, n-/n+), an exact lower bound on the chromatic number.
/// Requires n+ >= 1 and n- >= 1.
Rational inertial_bound(const Inertia& i);

/// true iff max(n+, n-) <= n(chi-1)/chi, exactly.
bool inertia_cap_check(const Inertia& i, int chi);

/// 1 + mu_1/|mu_n|. Requires mu_n < 0.
double hoffman_bound(const Spectrum& s);

/// Smallest c >= 2 with mu_1 + (sum of the c-1 smallest eigenvalues)
/// <= tol; a valid chromatic lower bound. Never exceeds the order (the
/// trace is zero, so c = n always qualifies up to rounding noise).
int hoffman_full_chi(const Spectrum& s, double tol = 1e-9);

/// n / min(n+, n-) for nonsingular inertia; a lower bound on the
/// fractional chromatic number. Requires n0 = 0 and n+, n- >= 1.
Rational chif_nonsingular_bound(const Inertia& i);

}  // namespace inertial
