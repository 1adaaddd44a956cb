#include <distpart/special_functions.hpp>

#include <cstdlib>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace distpart {

const Real& pi_value() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

const Real& ln2_value() {
  static const Real value = log(Real(2));
  return value;
}

BigRational bernoulli(unsigned n) {
  if (n == 0) return BigRational(1);
  if (n == 1) return BigRational(-1, 2);
  if (n % 2 == 1) return BigRational(0);

  // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j, exact throughout.
  std::vector<BigRational> b(n + 1);
  b[0] = 1;
  b[1] = BigRational(-1, 2);
  for (unsigned m = 2; m <= n; ++m) {
    if (m % 2 == 1) {
      b[m] = 0;
      continue;
    }
    BigRational acc(0);
    BigInt binom(1);  // C(m+1, j), updated incrementally
    for (unsigned j = 0; j < m; ++j) {
      if (j > 0) binom = binom * (m + 2 - j) / j;
      acc += BigRational(binom) * b[j];
    }
    b[m] = -acc / BigRational(m + 1);
  }
  return b[n];
}

BigRational zeta_nonpositive(long s) {
  if (s > 0) throw std::invalid_argument("zeta_nonpositive: s must be <= 0");
  const unsigned n = static_cast<unsigned>(-s);
  BigRational value = bernoulli(n + 1) / BigRational(n + 1);
  if (n % 2 == 1) value = -value;
  return value;
}

namespace {

// Chebyshev-accelerated alternating series for eta(s), s real > 0.
// With n terms the error decays like (3+sqrt(8))^{-n}; n = 80 leaves
// ~5e-62, far below working precision.
Real eta_series(const Real& s) {
  constexpr int n = 80;
  // a_i = n * (n+i-1)! 4^i / ((n-i)! (2i)!), partial sums d_k.
  std::vector<Real> d(n + 1);
  Real a(1);
  d[0] = a;
  for (int i = 1; i <= n; ++i) {
    a *= Real(4 * (n + i - 1)) * Real(n - i + 1) / (Real(2 * i) * Real(2 * i - 1));
    d[i] = d[i - 1] + a;
  }
  Real sum(0);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    sum += sign * (d[n] - d[k]) / pow(Real(k + 1), s);
    sign = -sign;
  }
  return sum / d[n];
}

}  // namespace

Real eta(const Real& s) {
  if (s <= 0)
    throw std::invalid_argument("eta: series requires s > 0; use eta_int");
  return eta_series(s);
}

Real eta_int(long s) {
  if (s >= 2) return eta_series(Real(s));
  if (s == 1) return ln2_value();
  // eta(s) = (1 - 2^{1-s}) zeta(s), both factors exact for s <= 0.
  BigInt two_pow(1);
  two_pow <<= static_cast<unsigned>(1 - s);
  const BigRational value =
      (BigRational(1) - BigRational(two_pow)) * zeta_nonpositive(s);
  return Real(value);
}

Real zeta(long s) {
  if (s == 1) throw std::domain_error("zeta: pole at s = 1");
  if (s <= 0) return Real(zeta_nonpositive(s));
  const Real denom = Real(1) - pow(Real(2), Real(1 - s));
  return eta_series(Real(s)) / denom;
}

Real zeta_real(const Real& s) {
  if (s <= 1) throw std::domain_error("zeta_real: requires s > 1");
  return eta_series(s) / (Real(1) - pow(Real(2), Real(1) - s));
}

Real fermi_fn(const Real& alpha, const Real& z) {
  if (z == 0) return Real(0);
  if (z == 1) {
    if (alpha <= 0)
      throw std::domain_error("fermi_fn: diverges at z = 1 for alpha <= 0");
    return eta_series(alpha);
  }
  if (z == -1) {
    if (alpha <= 1)
      throw std::domain_error("fermi_fn: diverges at z = -1 for alpha <= 1");
    return -zeta_real(alpha);
  }
  if (abs(z) > 1)
    throw std::domain_error("fermi_fn: series diverges for |z| > 1");

  // Direct power series; geometric convergence for |z| < 1. The stopping
  // rule bounds the tail by |term| / (1 - |z|) against the running sum.
  const Real az = abs(z);
  const Real eps("1e-55");
  Real sum(0);
  Real zp(1);
  for (long n = 1; n <= 2000000; ++n) {
    zp *= z;
    const Real term = zp / pow(Real(n), alpha);
    sum += (n % 2 == 1) ? term : -term;
    if (n >= 8) {
      const Real tail = abs(term) / (Real(1) - az);
      if (tail < eps * (abs(sum) + Real(1))) return sum;
    }
  }
  throw std::runtime_error("fermi_fn: series failed to converge");
}

}  // namespace distpart
