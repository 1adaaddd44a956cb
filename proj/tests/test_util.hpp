#pragma once

#include <distpart/special_functions.hpp>
#include <distpart/types.hpp>

namespace distpart::testing {

inline double rel(const Real& value, const Real& reference) {
  return (abs(value - reference) / abs(reference)).convert_to<double>();
}

inline double absdiff(const Real& value, const Real& reference) {
  return abs(value - reference).convert_to<double>();
}

inline BigInt factorial_big(int n) {
  BigInt f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Independent zeta oracle: truncated Dirichlet series with an
// Euler-Maclaurin tail,
//   zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_j B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}.
// With N = 40 and 20 correction terms the remainder sits far below the
// working precision for s >= 2, and nothing is shared with the
// accelerated alternating series the library uses.
inline Real zeta_euler_maclaurin(long s, int N = 40, int terms = 20) {
  Real sum(0);
  for (long n = 1; n < N; ++n) sum += Real(1) / pow(Real(n), s);
  const Real realN(N);
  sum += pow(realN, 1 - s) / Real(s - 1);
  sum += pow(realN, -s) / 2;
  Real rising(s);  // s (s+1) ... (s+2j-2)
  for (int j = 1; j <= terms; ++j) {
    const Real coeff = Real(bernoulli(2 * j)) / Real(factorial_big(2 * j));
    sum += coeff * rising * pow(realN, -s - 2 * j + 1);
    rising *= Real(s + 2 * j - 1) * Real(s + 2 * j);
  }
  return sum;
}

}  // namespace distpart::testing
