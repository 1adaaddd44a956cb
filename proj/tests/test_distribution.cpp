#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <distpart/canonical.hpp>
#include <distpart/distribution.hpp>

#include "test_util.hpp"

using namespace distpart;
using testing::absdiff;
using testing::rel;

namespace {

const PartitionTable& small_table() {
  static const PartitionTable table = build_table(1000);
  return table;
}

}  // namespace

TEST_CASE("micro distribution fixed rows") {
  const MicroDistribution d10 = micro_distribution(small_table(), 10);
  REQUIRE(d10.counts.size() == 5);
  CHECK(d10.counts[0] == 0);
  CHECK(d10.counts[1] == 1);
  CHECK(d10.counts[2] == 4);
  CHECK(d10.counts[3] == 4);
  CHECK(d10.counts[4] == 1);
  CHECK(d10.total == 10);

  const MicroDistribution d3 = micro_distribution(small_table(), 3);
  CHECK(d3.counts == std::vector<BigInt>{0, 1, 1});
  CHECK(d3.total == 2);
}

TEST_CASE("probabilities are exactly normalised as rationals") {
  const MicroDistribution dist = micro_distribution(small_table(), 200);
  BigRational sum(0);
  BigInt count_sum(0);
  for (const BigInt& c : dist.counts) {
    sum += BigRational(c, dist.total);
    count_sum += c;
  }
  CHECK(sum == 1);
  CHECK(count_sum == dist.total);
}

TEST_CASE("exact cumulants on tiny distributions") {
  const CumulantSet c3 = exact_cumulants(micro_distribution(small_table(), 3));
  CHECK(absdiff(c3.kappa1, Real(3) / 2) < 1e-49);
  CHECK(absdiff(c3.kappa2, Real(1) / 4) < 1e-49);
  CHECK(absdiff(c3.gamma2, Real(-2)) < 1e-45);  // symmetric two-point law

  const CumulantSet c10 =
      exact_cumulants(micro_distribution(small_table(), 10));
  CHECK(absdiff(c10.kappa1, Real(5) / 2) < 1e-49);
}

TEST_CASE("degenerate single-point distributions are signalled") {
  CHECK_THROWS_AS(exact_cumulants(micro_distribution(small_table(), 1)),
                  std::domain_error);
  CHECK_THROWS_AS(exact_cumulants(micro_distribution(small_table(), 2)),
                  std::domain_error);
}

TEST_CASE("moment accumulation order does not matter") {
  // Everything before the final rounding is rational, so reversing the
  // summation order must reproduce identical bits.
  const MicroDistribution dist = micro_distribution(small_table(), 700);
  BigInt weighted(0);
  for (long M = 0; M < static_cast<long>(dist.counts.size()); ++M)
    weighted += BigInt(M) * dist.counts[M];
  const BigRational mean(weighted, dist.total);
  BigRational mu2_fwd(0), mu2_rev(0), mu4_fwd(0), mu4_rev(0);
  const long top = static_cast<long>(dist.counts.size()) - 1;
  for (long M = 0; M <= top; ++M) {
    const BigRational d = BigRational(M) - mean;
    const BigRational w(dist.counts[M], dist.total);
    mu2_fwd += w * d * d;
    mu4_fwd += w * d * d * d * d;
  }
  for (long M = top; M >= 0; --M) {
    const BigRational d = BigRational(M) - mean;
    const BigRational w(dist.counts[M], dist.total);
    mu2_rev += w * d * d;
    mu4_rev += w * d * d * d * d;
  }
  CHECK(mu2_fwd == mu2_rev);
  CHECK(mu4_fwd == mu4_rev);

  const CumulantSet c = exact_cumulants(dist);
  CHECK(c.kappa2 == Real(mu2_fwd));
  CHECK(c.kappa4 == Real(mu4_fwd - 3 * mu2_fwd * mu2_fwd));
}

TEST_CASE("distribution at E = 1000 is unimodal") {
  const MicroDistribution dist = micro_distribution(small_table(), 1000);
  bool falling = false;
  bool unimodal = true;
  for (std::size_t M = 2; M < dist.counts.size(); ++M) {
    if (dist.counts[M] < dist.counts[M - 1]) falling = true;
    else if (falling && dist.counts[M] > dist.counts[M - 1]) unimodal = false;
  }
  CHECK(unimodal);
}

TEST_CASE("gamma signs at moderate energy") {
  const CumulantSet c = exact_cumulants(micro_distribution(small_table(), 500));
  CHECK(c.gamma1 < 0);
  CHECK(c.gamma2 < 0);
}

TEST_CASE("canonical probability normalisation and identity") {
  const Real b("0.5");
  const long cut = suggest_energy_cutoff(0.5);
  const PartitionTable table = build_table(cut);

  Real sum(0);
  for (long M = 0; M <= m_max(cut); ++M)
    sum += canonical_probability(table, b, M, cut);
  CHECK(absdiff(sum, Real(1)) < 1e-25);

  // denominator + 1 equals the excited-level product at z = 1
  Real denom(0);
  const Real x = exp(-b);
  Real weight(1);
  for (long E = 1; E <= cut; ++E) {
    weight *= x;
    denom += weight * Real(omega_distinct(table, E));
  }
  CHECK(absdiff(denom + 1, exp(log_xi_ex(b, Real(1)))) < 1e-25);
}

TEST_CASE("canonical probability concentrates at low temperature") {
  const Real b(20);
  const long cut = 40;
  const PartitionTable table = build_table(cut);
  const Real p1 = canonical_probability(table, b, 1, cut);
  CHECK(p1 > Real("0.999999"));
  Real rest(0);
  for (long M = 2; M <= m_max(cut); ++M)
    rest += canonical_probability(table, b, M, cut);
  CHECK(rest < Real("1e-6"));
}

TEST_CASE("canonical probability refuses a coarse truncation") {
  const PartitionTable table = build_table(60);
  // far from past the peak at b = 0.05
  CHECK_THROWS_AS(canonical_probability(table, Real("0.05"), 1, 60),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_probability(table, Real(-1), 1, 60),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_probability(table, Real("0.5"), 1, 600),
                  std::out_of_range);
}
