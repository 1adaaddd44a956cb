#include <distpart/canonical.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <distpart/special_functions.hpp>

namespace distpart {

long level_cutoff(double b) {
  if (b <= 0) throw std::invalid_argument("level_cutoff: b must be > 0");
  const double cut = std::ceil(120.0 / b);
  return std::max(32L, static_cast<long>(cut));
}

CanonicalPoint make_canonical_point(const Real& b, const Real& z) {
  if (b <= 0)
    throw std::invalid_argument("make_canonical_point: b must be > 0");
  if (z < 0)
    throw std::invalid_argument("make_canonical_point: z must be >= 0");
  return CanonicalPoint{b, z, level_cutoff(b.convert_to<double>())};
}

namespace {

constexpr long kChunk = 1024;

// Chunked geometric level sum: each chunk accumulates its terms in level
// order into its own slot, and the slots are combined in chunk order, so
// the result is bit-identical for any thread count. `term(nu, y, acc)`
// receives y = x^nu.
template <std::size_t N, class Term>
std::array<Real, N> sum_levels(const Real& x, long nu_cut, Term term) {
  const long nchunks = (nu_cut + kChunk - 1) / kChunk;
  std::vector<std::array<Real, N>> partial(nchunks);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < nchunks; ++c) {
    const long lo = c * kChunk + 1;
    const long hi = std::min(nu_cut, (c + 1) * kChunk);
    Real y = pow(x, static_cast<unsigned long>(lo));
    std::array<Real, N>& acc = partial[c];
    for (long nu = lo; nu <= hi; ++nu) {
      term(nu, y, acc);
      y *= x;
    }
  }
  std::array<Real, N> total{};
  for (long c = 0; c < nchunks; ++c)
    for (std::size_t i = 0; i < N; ++i) total[i] += partial[c][i];
  return total;
}

// Reference kernel: one straight pass, naive accumulation.
template <std::size_t N, class Term>
std::array<Real, N> sum_levels_serial(const Real& x, long nu_cut, Term term) {
  std::array<Real, N> acc{};
  Real y(1);
  for (long nu = 1; nu <= nu_cut; ++nu) {
    y *= x;
    term(nu, y, acc);
  }
  return acc;
}

// Per-level Bernoulli cumulants of the occupation u = y/(1+y).
struct FermiTerm {
  void operator()(long, const Real& y, std::array<Real, 5>& acc) const {
    const Real u = y / (1 + y);
    const Real w = u * (1 - u);
    acc[0] += log1p(y);
    acc[1] += u;
    acc[2] += w;
    acc[3] += w * (1 - 2 * u);
    acc[4] += w * (1 - 6 * u + 6 * u * u);
  }
};

// Per-level geometric cumulants of the occupation v = y/(1-y).
struct BoseTerm {
  void operator()(long, const Real& y, std::array<Real, 5>& acc) const {
    const Real v = y / (1 - y);
    const Real w = v * (1 + v);
    acc[0] -= log1p(-y);
    acc[1] += v;
    acc[2] += w;
    acc[3] += w * (1 + 2 * v);
    acc[4] += w * (1 + 6 * v + 6 * v * v);
  }
};

long resolve_cutoff(const Real& b, long nu_cut_override) {
  if (nu_cut_override > 0) return nu_cut_override;
  return level_cutoff(b.convert_to<double>());
}

void check_b(const Real& b, const char* who) {
  if (b <= 0) throw std::invalid_argument(std::string(who) + ": b must be > 0");
}

void check_k(int k, const char* who) {
  if (k < 0 || k > 4)
    throw std::invalid_argument(std::string(who) + ": k must be in 0..4");
}

}  // namespace

std::array<Real, 5> canonical_cumulants_all(const Real& b,
                                            long nu_cut_override) {
  check_b(b, "canonical_cumulants_all");
  return sum_levels<5>(exp(-b), resolve_cutoff(b, nu_cut_override),
                       FermiTerm{});
}

Real canonical_cumulant(int k, const Real& b) {
  check_k(k, "canonical_cumulant");
  return canonical_cumulants_all(b)[k];
}

std::array<Real, 5> bosonic_cumulants_all(const Real& b,
                                          long nu_cut_override) {
  check_b(b, "bosonic_cumulants_all");
  return sum_levels<5>(exp(-b), resolve_cutoff(b, nu_cut_override),
                       BoseTerm{});
}

Real bosonic_cumulant(int k, const Real& b) {
  check_k(k, "bosonic_cumulant");
  return bosonic_cumulants_all(b)[k];
}

namespace serial {

std::array<Real, 5> canonical_cumulants_all(const Real& b,
                                            long nu_cut_override) {
  check_b(b, "serial::canonical_cumulants_all");
  return sum_levels_serial<5>(exp(-b), resolve_cutoff(b, nu_cut_override),
                              FermiTerm{});
}

std::array<Real, 5> bosonic_cumulants_all(const Real& b,
                                          long nu_cut_override) {
  check_b(b, "serial::bosonic_cumulants_all");
  return sum_levels_serial<5>(exp(-b), resolve_cutoff(b, nu_cut_override),
                              BoseTerm{});
}

XiSums xi_level_sums(const Real& b, const Real& z) {
  const CanonicalPoint point = make_canonical_point(b, z);
  const auto sums = sum_levels_serial<3>(
      exp(-b), point.nu_cut, [&z](long nu, const Real& y, std::array<Real, 3>& acc) {
        const Real zy = z * y;
        const Real u = zy / (1 + zy);
        acc[0] += log1p(zy);
        acc[1] += nu * u;
        acc[2] += (nu * nu) * (u * (1 - u));
      });
  return XiSums{sums[0], sums[1], sums[2]};
}

}  // namespace serial

Real log_xi_ex(const CanonicalPoint& point) {
  if (point.z == 0) return Real(0);
  const auto sums = sum_levels<1>(
      exp(-point.b), point.nu_cut,
      [&point](long, const Real& y, std::array<Real, 1>& acc) {
        acc[0] += log1p(point.z * y);
      });
  return sums[0];
}

Real log_xi_ex(const Real& b, const Real& z) {
  return log_xi_ex(make_canonical_point(b, z));
}

XiSums xi_level_sums(const Real& b, const Real& z) {
  const CanonicalPoint point = make_canonical_point(b, z);
  const auto sums = sum_levels<3>(
      exp(-b), point.nu_cut, [&z](long nu, const Real& y, std::array<Real, 3>& acc) {
        const Real zy = z * y;
        const Real u = zy / (1 + zy);
        acc[0] += log1p(zy);
        acc[1] += nu * u;
        acc[2] += (nu * nu) * (u * (1 - u));
      });
  return XiSums{sums[0], sums[1], sums[2]};
}

Real fermion_boson_residual(int k, const Real& b) {
  check_k(k, "fermion_boson_residual");
  check_b(b, "fermion_boson_residual");
  const Real fermi = canonical_cumulant(k, b);
  const Real bose_b = bosonic_cumulant(k, b);
  const Real bose_2b = bosonic_cumulant(k, 2 * b);
  const Real lhs_minus_rhs = fermi - (bose_b - pow(Real(2), k) * bose_2b);
  Real scale = abs(fermi);
  if (scale < 1) scale = 1;
  return abs(lhs_minus_rhs) / scale;
}

AsymptoticCoefficients asymptotic_cumulant_coefficients(int k) {
  check_k(k, "asymptotic_cumulant_coefficients");
  // Residues of b^{-t} Gamma(t) zeta(t) eta(t+1-k) at t = 1, 0, -1:
  // the zeta pole contributes eta(2-k)/b, the Gamma poles contribute
  // zeta(0) eta(1-k) and -zeta(-1) eta(-k) b.
  AsymptoticCoefficients c;
  c.inv_b = eta_int(2 - k);
  c.constant = Real(zeta_nonpositive(0)) * eta_int(1 - k);
  c.linear = -Real(zeta_nonpositive(-1)) * eta_int(-k);
  return c;
}

Real asymptotic_canonical_cumulant(int k, const Real& b) {
  check_k(k, "asymptotic_canonical_cumulant");
  if (b <= 0 || b > Real("0.2"))
    throw std::invalid_argument(
        "asymptotic_canonical_cumulant: requires 0 < b <= 0.2");
  const AsymptoticCoefficients c = asymptotic_cumulant_coefficients(k);
  return c.inv_b / b + c.constant + c.linear * b;
}

namespace {

// Coefficients (index = power of u) of the polynomial obtained from the
// per-level cumulant by `order` applications of d/db; the summand is then
// nu^order * poly(u). One d/db maps p(u) to (u^2 - u) p'(u).
std::vector<long long> derivative_polynomial(int k, int order) {
  std::vector<long long> p;
  int remaining = order;
  if (k == 0) {
    // d/db ln(1+e^{-b nu}) = -nu u, so start one derivative in.
    p = {0, -1};
    remaining -= 1;
  } else if (k == 1) {
    p = {0, 1};
  } else if (k == 2) {
    p = {0, 1, -1};
  } else if (k == 3) {
    p = {0, 1, -3, 2};
  } else {
    p = {0, 1, -7, 12, -6};
  }
  for (int step = 0; step < remaining; ++step) {
    std::vector<long long> dp(p.size() + 1, 0);
    for (std::size_t i = 1; i < p.size(); ++i) {
      const long long c = p[i] * static_cast<long long>(i);
      dp[i + 1] += c;  // u^2 * p'
      dp[i] -= c;      // -u * p'
    }
    p = std::move(dp);
  }
  return p;
}

}  // namespace

Real canonical_cumulant_b_derivative(int k, int order, const Real& b) {
  check_k(k, "canonical_cumulant_b_derivative");
  check_b(b, "canonical_cumulant_b_derivative");
  if (order < 1 || order > 3)
    throw std::invalid_argument(
        "canonical_cumulant_b_derivative: order must be in 1..3");
  const std::vector<long long> poly = derivative_polynomial(k, order);
  const long nu_cut = level_cutoff(b.convert_to<double>());
  const auto sums = sum_levels<1>(
      exp(-b), nu_cut,
      [&poly, order](long nu, const Real& y, std::array<Real, 1>& acc) {
        const Real u = y / (1 + y);
        Real value(0);
        for (std::size_t i = poly.size(); i-- > 0;)
          value = value * u + static_cast<long>(poly[i]);
        long long weight = 1;
        for (int j = 0; j < order; ++j) weight *= nu;
        acc[0] += value * static_cast<long>(weight);
      });
  return sums[0];
}

}  // namespace distpart
