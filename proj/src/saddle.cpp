#include <distpart/saddle.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <distpart/canonical.hpp>
#include <distpart/special_functions.hpp>

namespace distpart {

namespace {

constexpr double kResidualContract = 1e-12;

SaddleSolution solve_impl(long E, const Real& z, double initial_b) {
  if (E < 10) throw std::invalid_argument("solve_saddle: requires E >= 10");
  if (z < Real(1) / 2 || z > 2)
    throw std::invalid_argument("solve_saddle: z must lie in [0.5, 2]");

  const double guess =
      initial_b > 0 ? initial_b
                    : M_PI / std::sqrt(12.0 * (static_cast<double>(E) + 1));
  Real lo = Real(guess) / 4;
  Real hi = Real(guess) * 4;
  const Real target = Real(E) + 1;

  // The mean energy is strictly decreasing in b, so the bracket must
  // straddle the target; report otherwise instead of widening.
  XiSums lo_sums = xi_level_sums(lo, z);
  XiSums hi_sums = xi_level_sums(hi, z);
  if (lo_sums.mean_energy < target || hi_sums.mean_energy > target) {
    std::ostringstream os;
    os << "solve_saddle: bracket [" << lo.str(6) << ", " << hi.str(6)
       << "] does not enclose the root for E=" << E
       << " (mean energies " << lo_sums.mean_energy.str(6) << ", "
       << hi_sums.mean_energy.str(6) << ")";
    throw std::runtime_error(os.str());
  }

  Real b = Real(guess);
  XiSums sums = xi_level_sums(b, z);
  const Real tol = target * Real("1e-28");
  for (int iter = 0; iter < 200; ++iter) {
    const Real g = sums.mean_energy - target;
    if (abs(g) < tol) break;
    if (g > 0)
      lo = b;  // mean energy too high -> b too small
    else
      hi = b;
    // Newton step; d(mean)/db = -energy_variance.
    Real next = b + g / sums.energy_variance;
    if (next <= lo || next >= hi) next = (lo + hi) / 2;
    if (next == b) break;
    b = next;
    sums = xi_level_sums(b, z);
  }

  SaddleSolution sol;
  sol.E = E;
  sol.z = z;
  sol.b0 = b;
  sol.residual = abs(sums.mean_energy - target) / target;
  if (sol.residual > Real(kResidualContract)) {
    std::ostringstream os;
    os << "solve_saddle: residual " << sol.residual.str(6)
       << " misses the contract at E=" << E;
    throw std::runtime_error(os.str());
  }
  sol.log_upsilon = sums.log_xi + Real(E) * b - log(2 * pi_value()) / 2 -
                    log(sums.energy_variance) / 2;
  return sol;
}

}  // namespace

SaddleSolution solve_saddle(long E, const Real& z) {
  return solve_impl(E, z, 0);
}

SaddleSolution solve_saddle(long E, const Real& z, double initial_b) {
  return solve_impl(E, z, initial_b);
}

Real log_upsilon_gaussian(long E, const Real& z) {
  return solve_impl(E, z, 0).log_upsilon;
}

namespace {

// Finite-difference grid: all stencil offsets are integer multiples of
// s0 = 2.5e-4; the dyadic step levels h = {32,16,8,4} * s0 span
// [1e-3, 8e-3] and every level shares points with its neighbours.
const Real& fd_unit() {
  static const Real value("0.00025");
  return value;
}

class UpsilonGrid {
 public:
  explicit UpsilonGrid(long E) : E_(E) {}

  const Real& value(long j) {
    auto it = cache_.find(j);
    if (it != cache_.end()) return it->second;
    const Real z = exp(Real(j) * fd_unit());
    const SaddleSolution sol =
        warm_ > 0 ? solve_saddle(E_, z, warm_) : solve_saddle(E_, z);
    warm_ = sol.b0.convert_to<double>();
    return cache_.emplace(j, sol.log_upsilon).first->second;
  }

 private:
  long E_;
  double warm_ = 0;
  std::map<long, Real> cache_;
};

Real central_difference(int k, UpsilonGrid& grid, long hu) {
  const Real h = Real(hu) * fd_unit();
  switch (k) {
    case 1:
      return (grid.value(hu) - grid.value(-hu)) / (2 * h);
    case 2:
      return (grid.value(hu) - 2 * grid.value(0) + grid.value(-hu)) / (h * h);
    case 3:
      return (grid.value(2 * hu) - 2 * grid.value(hu) + 2 * grid.value(-hu) -
              grid.value(-2 * hu)) /
             (2 * h * h * h);
    default:
      return (grid.value(2 * hu) - 4 * grid.value(hu) + 6 * grid.value(0) -
              4 * grid.value(-hu) + grid.value(-2 * hu)) /
             (h * h * h * h);
  }
}

Real richardson(int k, UpsilonGrid& grid, long hu) {
  // Central stencils are O(h^2); one Richardson level removes that term.
  const Real coarse = central_difference(k, grid, hu);
  const Real fine = central_difference(k, grid, hu / 2);
  return (4 * fine - coarse) / 3;
}

}  // namespace

std::array<Real, 4> mc_cumulants_saddle(long E) {
  if (E < 100)
    throw std::invalid_argument("mc_cumulants_saddle: requires E >= 100");
  UpsilonGrid grid(E);
  constexpr long levels[] = {32, 16, 8, 4};  // h = 8e-3 .. 1e-3

  std::array<Real, 4> out{};
  for (int k = 1; k <= 4; ++k) {
    Real estimates[4];
    for (int m = 0; m < 4; ++m) estimates[m] = richardson(k, grid, levels[m]);

    // Stability plateau: adjacent step levels must agree.
    int best = -1;
    Real best_gap;
    for (int m = 0; m + 1 < 4; ++m) {
      const Real gap = abs(estimates[m + 1] - estimates[m]);
      if (best < 0 || gap < best_gap) {
        best = m;
        best_gap = gap;
      }
    }
    Real scale = abs(estimates[best + 1]);
    if (scale < 1) scale = 1;
    if (best_gap / scale > Real("1e-4")) {
      std::ostringstream os;
      os << "mc_cumulants_saddle: no stability plateau for k=" << k
         << " at E=" << E << "; estimates";
      for (int m = 0; m < 4; ++m) os << " h=" << levels[m] << "*2.5e-4: "
                                     << estimates[m].str(17);
      throw std::runtime_error(os.str());
    }
    out[k - 1] = estimates[best + 1];
  }
  return out;
}

Real mc_cumulant_saddle(int k, long E) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("mc_cumulant_saddle: k must be in 1..4");
  return mc_cumulants_saddle(E)[k - 1];
}

Real mc_cumulant_chain_first(long E) {
  const SaddleSolution sol = solve_saddle(E, Real(1));
  const Real k1 = canonical_cumulant(1, sol.b0);
  const Real d1k1 = canonical_cumulant_b_derivative(1, 1, sol.b0);
  const Real d2k1 = canonical_cumulant_b_derivative(1, 2, sol.b0);
  const Real d2k0 = canonical_cumulant_b_derivative(0, 2, sol.b0);
  const Real d3k0 = canonical_cumulant_b_derivative(0, 3, sol.b0);
  return k1 - d2k1 / (2 * d2k0) + (d1k1 / d2k0) * (1 + d3k0 / (2 * d2k0));
}

Real mc_cumulant_asymptotic(int k, long E) {
  if (k < 1 || k > 4)
    throw std::invalid_argument("mc_cumulant_asymptotic: k must be in 1..4");
  if (E < 100)
    throw std::invalid_argument("mc_cumulant_asymptotic: requires E >= 100");
  const Real& p = pi_value();
  const Real& l = ln2_value();
  const Real root3 = sqrt(Real(3));
  const Real se = sqrt(Real(E));
  const Real p2 = p * p;
  const Real p4 = p2 * p2;
  const Real l2 = l * l;
  switch (k) {
    case 1:
      return (2 * root3 * l / p) * se - Real(1) / 4 + 3 * l / p2;
    case 2:
      return -(root3 / (p2 * p)) * (-p2 + 12 * l2) * se -
             (36 * l2 - Real(2) / 3 * p2) / p4 - Real(1) / 8;
    case 3:
      return (root3 / (p4 * p)) * (-36 * p2 * l + p4 + 432 * l2 * l) * se +
             (Real(3) / 4 * p4 - 54 * p2 + 864 * l2 * l) / (p4 * p2);
    default: {
      const Real l4 = l2 * l2;
      return -(3 * root3 / (p4 * p2 * p)) *
                 (4 * p4 * l + 2160 * l4 - 216 * p2 * l2 + 3 * p4) * se +
             (p4 * p4 / 16 + 31104 * l4 + 27 * p4 - 2592 * p2 * l2 +
              36 * p4 * l) /
                 (p4 * p4);
    }
  }
}

AsymptoticCumulants asymptotic_cumulants(long E) {
  AsymptoticCumulants a;
  a.E = E;
  a.kappa1 = mc_cumulant_asymptotic(1, E);
  a.kappa2 = mc_cumulant_asymptotic(2, E);
  a.kappa3 = mc_cumulant_asymptotic(3, E);
  a.kappa4 = mc_cumulant_asymptotic(4, E);
  a.gamma1 = a.kappa3 / pow(a.kappa2, Real(3) / 2);
  a.gamma2 = a.kappa4 / (a.kappa2 * a.kappa2);
  return a;
}

std::pair<Real, Real> gamma_asymptotic(long E) {
  if (E < 1) throw std::invalid_argument("gamma_asymptotic: requires E >= 1");
  const Real e(E);
  return {-Real("0.12894") / pow(e, Real(1) / 4),
          -Real("1.2001") / sqrt(e)};
}

}  // namespace distpart
