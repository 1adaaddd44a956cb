#include <distpart/distribution.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace distpart {

MicroDistribution micro_distribution(const PartitionTable& table, long E) {
  if (E < 1) throw std::invalid_argument("micro_distribution: E must be >= 1");
  MicroDistribution dist;
  dist.E = E;
  const long top = m_max(E);
  dist.counts.resize(top + 1);
  dist.total = 0;
  for (long M = 0; M <= top; ++M) {
    dist.counts[M] = phi_distinct(table, E, M);
    dist.total += dist.counts[M];
  }
  return dist;
}

CumulantSet exact_cumulants(const MicroDistribution& dist) {
  if (dist.total <= 0)
    throw std::invalid_argument("exact_cumulants: empty distribution");

  long support = 0;
  for (const BigInt& c : dist.counts)
    if (c > 0) ++support;
  if (support < 2)
    throw std::domain_error(
        "exact_cumulants: single-point distribution has kappa2 = 0; "
        "skewness and excess are undefined");

  // Everything up to the final rounding is exact rational arithmetic,
  // with moments taken about the exact mean.
  BigInt weighted(0);
  for (long M = 0; M < static_cast<long>(dist.counts.size()); ++M)
    weighted += BigInt(M) * dist.counts[M];
  const BigRational mean(weighted, dist.total);

  BigRational mu2(0), mu3(0), mu4(0);
  for (long M = 0; M < static_cast<long>(dist.counts.size()); ++M) {
    if (dist.counts[M] == 0) continue;
    const BigRational d = BigRational(M) - mean;
    const BigRational d2 = d * d;
    const BigRational w(dist.counts[M], dist.total);
    mu2 += w * d2;
    mu3 += w * d2 * d;
    mu4 += w * d2 * d2;
  }
  const BigRational kappa4_rational = mu4 - 3 * mu2 * mu2;

  CumulantSet cs;
  cs.kappa1 = Real(mean);
  cs.kappa2 = Real(mu2);
  cs.kappa3 = Real(mu3);
  cs.kappa4 = Real(kappa4_rational);
  cs.gamma1 = cs.kappa3 / pow(cs.kappa2, Real(3) / 2);
  cs.gamma2 = cs.kappa4 / (cs.kappa2 * cs.kappa2);
  return cs;
}

long suggest_energy_cutoff(double b) {
  if (b <= 0)
    throw std::invalid_argument("suggest_energy_cutoff: b must be > 0");
  // Solve b E - pi sqrt(E/3) = 75 by fixed-point iteration; 75 nats of
  // margin leaves the term bound a couple of orders below 1e-30.
  double e = 75.0 / b;
  for (int i = 0; i < 64; ++i) e = (75.0 + M_PI * std::sqrt(e / 3.0)) / b;
  return static_cast<long>(e) + 5;
}

Real canonical_probability(const PartitionTable& table, const Real& b, long M,
                           long E_cut) {
  if (b <= 0)
    throw std::invalid_argument("canonical_probability: b must be > 0");
  if (M < 0) throw std::invalid_argument("canonical_probability: M < 0");
  if (E_cut < 3 || E_cut > table.n_max())
    throw std::out_of_range(
        "canonical_probability: E_cut outside table coverage");
  if (m_max(E_cut) > table.k_max())
    throw std::out_of_range(
        "canonical_probability: table too narrow for E_cut");

  const Real x = exp(-b);
  Real weight(1);
  Real numer(0), denom(0);
  Real last_term(0), prev_term(0);
  for (long E = 1; E <= E_cut; ++E) {
    weight *= x;
    const Real term = weight * Real(omega_distinct(table, E));
    denom += term;
    prev_term = last_term;
    last_term = term;
    if (M <= m_max(E) && M >= 1)
      numer += weight * Real(phi_distinct(table, E, M));
  }

  // Truncation contract: the summand must already be decaying and the
  // final term negligible against the accumulated denominator.
  const Real bound = last_term / denom;
  if (E_cut >= 3 && last_term >= prev_term) {
    std::ostringstream os;
    os << "canonical_probability: summand still growing at E_cut=" << E_cut
       << " (b=" << b.str(6) << "); tail bound unavailable";
    throw std::invalid_argument(os.str());
  }
  if (bound >= Real("1e-30")) {
    std::ostringstream os;
    os << "canonical_probability: truncation too coarse, last term / partial "
          "denominator = "
       << bound.str(6) << " at E_cut=" << E_cut << " (need < 1e-30)";
    throw std::invalid_argument(os.str());
  }
  return numer / denom;
}

}  // namespace distpart
