#pragma once

#include <vector>

#include <distpart/partition_table.hpp>
#include <distpart/types.hpp>

namespace distpart {

/*
 * Exact distribution of the number of parts M over all partitions of E
 * into distinct parts: counts[M] = Phi(E,M) for M = 0..m_max(E),
 * total = Omega(E). Immutable value type; counts[0] is always zero and
 * the rational probabilities counts[M]/total sum to exactly 1.
 */
struct MicroDistribution {
  long E = 0;
  std::vector<BigInt> counts;
  BigInt total;
};

MicroDistribution micro_distribution(const PartitionTable& table, long E);

/*
 * First four cumulants of a distribution plus skewness and excess,
 * gamma1 = kappa3 / kappa2^{3/2}, gamma2 = kappa4 / kappa2^2.
 * Values carry the full working precision (50 digits).
 */
struct CumulantSet {
  Real kappa1;
  Real kappa2;
  Real kappa3;
  Real kappa4;
  Real gamma1;
  Real gamma2;
};

/// Moments are accumulated about the exact rational mean in big-rational
/// arithmetic; only the final values are rounded to Real. Throws
/// std::domain_error for a single-point distribution (kappa2 = 0 makes
/// gamma1/gamma2 undefined).
CumulantSet exact_cumulants(const MicroDistribution& dist);

/// Smallest energy cutoff for which the canonical tail at inverse
/// temperature b is negligible (term bound below 1e-30 of the sum).
long suggest_energy_cutoff(double b);

/// Canonical probability of exactly M parts at inverse temperature b,
/// with numerator and denominator sums truncated at E_cut:
///
///   p(M) = sum_E e^{-bE} Phi(E,M) / sum_E e^{-bE} Omega(E).
///
/// Requires the truncation to be past the peak of the summand and the
/// last term to be below 1e-30 of the partial denominator; otherwise
/// throws with the offending tail bound in the message.
Real canonical_probability(const PartitionTable& table, const Real& b,
                           long M, long E_cut);

}  // namespace distpart
