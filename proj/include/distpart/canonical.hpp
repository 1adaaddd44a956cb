#pragma once

#include <array>

#include <distpart/types.hpp>

namespace distpart {

/*
 * Canonical-ensemble machinery for the excited-level product
 *
 *   Xi_ex(b,z) = prod_{nu>=1} (1 + z e^{-b nu}),   b > 0,
 *
 * whose log-derivatives in s = ln z at z = 1 are the canonical cumulants.
 * Every sum over levels is truncated at level_cutoff(b); the cutoff keeps
 * even nu^3-weighted tails below 1e-30, so doubling it moves no result
 * by more than 1e-25.
 */

/// Truncation level: smallest nu with b*nu >= 120 (floor of 32 levels).
long level_cutoff(double b);

struct CanonicalPoint {
  Real b;
  Real z;
  long nu_cut;
};

/// Validates b > 0, z >= 0 and attaches the cutoff.
CanonicalPoint make_canonical_point(const Real& b, const Real& z);

/// ln Xi_ex(b,z) = sum_nu ln(1 + z e^{-b nu}).
Real log_xi_ex(const CanonicalPoint& point);
Real log_xi_ex(const Real& b, const Real& z);

/// Canonical cumulants (z d/dz)^k ln Xi_ex at z = 1 for k = 0..4, via the
/// per-level Bernoulli cumulants with u_nu = 1/(e^{b nu}+1):
///   k=0: sum ln(1+e^{-b nu}),  k=1: sum u,  k=2: sum u(1-u),
///   k=3: sum u(1-u)(1-2u),     k=4: sum u(1-u)(1-6u+6u^2).
/// nu_cut_override > 0 replaces the default cutoff (used by truncation
/// stability tests).
std::array<Real, 5> canonical_cumulants_all(const Real& b,
                                            long nu_cut_override = 0);
Real canonical_cumulant(int k, const Real& b);

/// Bosonic counterpart, per-level geometric cumulants with
/// v_nu = 1/(e^{b nu}-1):
///   k=0: sum -ln(1-e^{-b nu}),  k=1: sum v,  k=2: sum v(1+v),
///   k=3: sum v(1+v)(1+2v),      k=4: sum v(1+v)(1+6v+6v^2).
std::array<Real, 5> bosonic_cumulants_all(const Real& b,
                                          long nu_cut_override = 0);
Real bosonic_cumulant(int k, const Real& b);

/// Relative residual of the fermion-boson cumulant identity
///   kappa_F^(k)(b) = kappa_B^(k)(b) - 2^k kappa_B^(k)(2b),
/// normalised by max(1, |kappa_F^(k)(b)|).
Real fermion_boson_residual(int k, const Real& b);

/// Coefficients of the three-residue small-b expansion
///   kappa^(k)(b) ~ inv_b / b + constant + linear * b,
/// assembled from eta/zeta values (inv_b = eta(2-k),
/// constant = zeta(0) eta(1-k), linear = -zeta(-1) eta(-k)).
struct AsymptoticCoefficients {
  Real inv_b;
  Real constant;
  Real linear;
};
AsymptoticCoefficients asymptotic_cumulant_coefficients(int k);

/// Small-b asymptotic value of the fermionic canonical cumulant.
/// Valid for 0 < b <= 0.2.
Real asymptotic_canonical_cumulant(int k, const Real& b);

/// (d/db)^order of the fermionic cumulant level sum, order = 1..3,
/// by exact term-wise differentiation (each d/db maps phi(u) to
/// -nu u(1-u) phi'(u), so the summand is nu^order times a polynomial
/// in u).
Real canonical_cumulant_b_derivative(int k, int order, const Real& b);

/// The three level sums the saddle point needs at general z:
/// log_xi = ln Xi_ex, mean_energy = -d/db ln Xi_ex = sum nu u_nu(z),
/// energy_variance = d^2/db^2 ln Xi_ex = sum nu^2 u(1-u).
struct XiSums {
  Real log_xi;
  Real mean_energy;
  Real energy_variance;
};
XiSums xi_level_sums(const Real& b, const Real& z);

/*
 * Straight-line reference implementations of the level sums (no OpenMP,
 * naive left-to-right accumulation). Kept for tests and the kernel
 * benchmark; results agree with the chunked parallel kernels to the last
 * few ulps of the working precision.
 */
namespace serial {
std::array<Real, 5> canonical_cumulants_all(const Real& b,
                                            long nu_cut_override = 0);
std::array<Real, 5> bosonic_cumulants_all(const Real& b,
                                          long nu_cut_override = 0);
XiSums xi_level_sums(const Real& b, const Real& z);
}  // namespace serial

}  // namespace distpart
