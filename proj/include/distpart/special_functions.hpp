#pragma once

#include <distpart/types.hpp>

namespace distpart {

/// Bernoulli number B_n as an exact rational (B_1 = -1/2 convention,
/// odd n > 1 vanish).
BigRational bernoulli(unsigned n);

/// Riemann zeta at non-positive integer argument, exact:
/// zeta(-n) = (-1)^n B_{n+1} / (n+1).
BigRational zeta_nonpositive(long s);

/// Riemann zeta at integer s != 1. s >= 2 uses an accelerated alternating
/// series (error well below 1e-40 at working precision); s <= 0 is exact.
Real zeta(long s);

/// Riemann zeta for real s > 1.
Real zeta_real(const Real& s);

/// Dirichlet eta(s) = (1 - 2^{1-s}) zeta(s) for real s > 0, via the
/// Chebyshev-accelerated alternating series. eta(1) = ln 2.
Real eta(const Real& s);

/// eta at integer argument; s <= 0 goes through the exact rational route.
Real eta_int(long s);

/// Fermionic function f_alpha(z) = sum_{n>=1} (-1)^{n+1} z^n / n^alpha
/// (= -Li_alpha(-z)). Domain: |z| < 1 any alpha; z = 1 needs alpha > 0;
/// z = -1 needs alpha > 1. Anything else is rejected.
Real fermi_fn(const Real& alpha, const Real& z);

}  // namespace distpart
