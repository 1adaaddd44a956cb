#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <distpart/special_functions.hpp>

#include "test_util.hpp"

using namespace distpart;
using testing::rel;
using testing::absdiff;
using testing::zeta_euler_maclaurin;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == BigRational(1));
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(3) == BigRational(0));
  CHECK(bernoulli(4) == BigRational(-1, 30));
  CHECK(bernoulli(12) == BigRational(-691, 2730));
  CHECK(bernoulli(13) == BigRational(0));
}

TEST_CASE("zeta at classical points") {
  const Real pi2_over_6 = pi_value() * pi_value() / 6;
  CHECK(absdiff(zeta(2), pi2_over_6) < 1e-45);
  CHECK(absdiff(zeta(0), Real(-1) / 2) < 1e-49);
  CHECK(absdiff(zeta(-3), Real(1) / 120) < 1e-49);
  CHECK(zeta_nonpositive(-1) == BigRational(-1, 12));
  CHECK(zeta_nonpositive(-3) == BigRational(1, 120));
  CHECK(zeta_nonpositive(-2) == BigRational(0));
  CHECK_THROWS_AS(zeta(1), std::domain_error);
}

TEST_CASE("zeta against the Euler-Maclaurin oracle") {
  for (long s : {2, 3, 4, 5, 7, 10}) {
    CHECK(rel(zeta(s), zeta_euler_maclaurin(s)) < 1e-45);
  }
}

TEST_CASE("eta/zeta relation through independent series") {
  // eta from the alternating series, zeta from Euler-Maclaurin.
  for (long a : {2, 3, 4, 5}) {
    const Real lhs = eta(Real(a));
    const Real rhs =
        (Real(1) - pow(Real(2), Real(1 - a))) * zeta_euler_maclaurin(a);
    CHECK(absdiff(lhs, rhs) < 1e-35);
  }
  CHECK(absdiff(eta_int(1), ln2_value()) < 1e-49);
  CHECK(absdiff(eta_int(0), Real(1) / 2) < 1e-49);
  CHECK(absdiff(eta_int(-1), Real(1) / 4) < 1e-49);
  CHECK(absdiff(eta_int(-2), Real(0)) < 1e-49);
  CHECK(absdiff(eta_int(-3), Real(-1) / 8) < 1e-49);
}

TEST_CASE("fermionic function special values") {
  CHECK(absdiff(fermi_fn(Real(1), Real(1)), ln2_value()) < 1e-45);
  const Real pi2_over_12 = pi_value() * pi_value() / 12;
  CHECK(absdiff(fermi_fn(Real(2), Real(1)), pi2_over_12) < 1e-45);
  CHECK(fermi_fn(Real(3), Real(0)) == 0);
  // f_alpha(-1) = -zeta(alpha)
  CHECK(rel(fermi_fn(Real(2), Real(-1)), -zeta(2)) < 1e-45);
  // interior point against the straight series identity
  // f_1(z) = ln(1+z)
  CHECK(absdiff(fermi_fn(Real(1), Real("0.5")), log(Real("1.5"))) < 1e-48);
  CHECK_THROWS_AS(fermi_fn(Real("0.5"), Real(-1)), std::domain_error);
  CHECK_THROWS_AS(fermi_fn(Real(-1), Real(1)), std::domain_error);
  CHECK_THROWS_AS(fermi_fn(Real(2), Real("1.5")), std::domain_error);
}

TEST_CASE("fermionic derivative property z d/dz f_a = f_{a-1}") {
  // Richardson-extrapolated central differences at z = 0.5; four dyadic
  // steps cancel through O(h^6).
  const Real z("0.5");
  for (const Real alpha : {Real(2), Real("1.5"), Real(3)}) {
    auto f = [&](const Real& zz) { return fermi_fn(alpha, zz); };
    const Real h0("2e-4");
    Real d[4];
    for (int m = 0; m < 4; ++m) {
      const Real h = h0 / (1 << m);
      d[m] = (f(z + h) - f(z - h)) / (2 * h);
    }
    for (int level = 1; level < 4; ++level) {
      const Real fac = pow(Real(4), level);
      for (int m = 0; m + level < 4; ++m)
        d[m] = (fac * d[m + 1] - d[m]) / (fac - 1);
    }
    const Real expected = fermi_fn(alpha - 1, z) / z;  // f' = f_{a-1}/z
    CHECK(absdiff(z * d[0], fermi_fn(alpha - 1, z)) < 1e-25);
    CHECK(rel(d[0], expected) < 1e-24);
  }
}
