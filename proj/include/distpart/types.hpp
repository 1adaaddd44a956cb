#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace distpart {

/// Arbitrary-precision non-negative counts (partition numbers grow like
/// exp(pi*sqrt(E/3)), ~1e50 around E = 4500).
using BigInt = boost::multiprecision::mpz_int;

/// Exact rationals for moment arithmetic.
using BigRational = boost::multiprecision::mpq_rational;

/// Working real type: 50 significant decimal digits (MPFR backend).
/// All real-valued results of the library are carried at this precision.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<50>,
    boost::multiprecision::et_off>;

inline constexpr int real_decimal_digits = 50;

const Real& pi_value();
const Real& ln2_value();

}  // namespace distpart
