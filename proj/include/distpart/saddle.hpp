#pragma once

#include <array>
#include <utility>

#include <distpart/types.hpp>

namespace distpart {

/*
 * Saddle-point evaluation of the generating function
 * Upsilon(E,z) = sum_M z^M Phi(E,M), whose log-derivatives in s = ln z at
 * z = 1 are the microcanonical cumulants of the number-of-parts
 * distribution.
 */

struct SaddleSolution {
  long E = 0;
  Real z;
  Real b0;           // saddle point of the inverse-temperature integral
  Real log_upsilon;  // Gaussian-approximation value of ln Upsilon(E,z)
  Real residual;     // |mean_energy(b0,z) - (E+1)| / (E+1)
};

/// Solve E + 1 = -d/db ln Xi_ex(b0,z) by safeguarded Newton iteration on
/// the strictly decreasing map b -> mean energy, bracketed around the
/// leading-order guess b ~ pi/sqrt(12(E+1)). A bracket that fails to
/// enclose the root is reported (thrown), never widened. Requires
/// E >= 10 and z in [0.5, 2].
SaddleSolution solve_saddle(long E, const Real& z);

/// Same, with a caller-provided starting point (warm starts during
/// finite-difference sweeps).
SaddleSolution solve_saddle(long E, const Real& z, double initial_b);

/// ln Upsilon in the Gaussian approximation:
///   ln Xi_ex(b0,z) + E b0 - ln(2 pi)/2 - ln[d^2/db^2 ln Xi_ex(b0,z)]/2.
Real log_upsilon_gaussian(long E, const Real& z);

/// Microcanonical cumulants k = 1..4 by central finite differences of
/// s -> ln Upsilon(E, e^s) with Richardson extrapolation; every stencil
/// point re-solves the saddle, so the full b0(z) dependence is included.
/// Steps h in [1e-3, 8e-3] are scanned for a stability plateau; absence
/// of a plateau throws with the scan attached. Requires E >= 100.
std::array<Real, 4> mc_cumulants_saddle(long E);
Real mc_cumulant_saddle(int k, long E);

/// First microcanonical cumulant through the explicit chain rule in terms
/// of canonical cumulants and their b-derivatives at the saddle:
///   kappa1_cn(b0) - d2k1/(2 d2k0) + (d1k1/d2k0)(1 + d3k0/(2 d2k0)).
/// Independent cross-check of mc_cumulant_saddle(1, E).
Real mc_cumulant_chain_first(long E);

/// Closed-form large-E asymptotics of the microcanonical cumulants
/// (leading sqrt(E) term plus constant), coefficients carried as exact
/// combinations of pi and ln 2. Requires E >= 100.
Real mc_cumulant_asymptotic(int k, long E);

struct AsymptoticCumulants {
  long E = 0;
  Real kappa1;
  Real kappa2;
  Real kappa3;
  Real kappa4;
  Real gamma1;
  Real gamma2;
};

/// All four closed-form cumulants with the derived gamma ratios.
AsymptoticCumulants asymptotic_cumulants(long E);

/// The printed asymptotic laws for skewness and excess,
///   gamma1(E) = -0.12894 E^{-1/4},   gamma2(E) = -1.2001 E^{-1/2}.
/// Requires E >= 1.
std::pair<Real, Real> gamma_asymptotic(long E);

}  // namespace distpart
