#include <distpart/verify.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <distpart/canonical.hpp>
#include <distpart/distribution.hpp>
#include <distpart/enumerate.hpp>
#include <distpart/partition_table.hpp>
#include <distpart/saddle.hpp>
#include <distpart/special_functions.hpp>

namespace distpart {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult recurrence_check(const PartitionTable& table, bool inject_fault) {
  CheckResult result;
  result.name = "partition-recurrence";
  std::string detail;
  if (inject_fault) {
    // Rebuild the table with one interior cell bumped; the spot check
    // must notice.
    const long n_max = table.n_max(), k_max = table.k_max();
    std::vector<BigInt> cells(
        static_cast<std::size_t>(n_max + 1) * (k_max + 1));
    for (long n = 0; n <= n_max; ++n)
      for (long k = 0; k <= k_max; ++k) {
        if (n == 0 && k == 0) continue;
        cells[n * (k_max + 1) + k] = table.at(n, k);
      }
    cells[(n_max / 2) * (k_max + 1) + std::max(1L, k_max / 2)] += 1;
    const PartitionTable corrupted(n_max, k_max, std::move(cells));
    result.passed = corrupted.validate_recurrence(&detail);
    result.detail = "fault injected; " + detail;
    return result;
  }
  result.passed = table.validate_recurrence(&detail);
  result.detail = detail;
  return result;
}

CheckResult oracle_check(const PartitionTable& table, long limit) {
  CheckResult result;
  result.name = "oracle-equivalence";
  for (long E = 1; E <= limit; ++E) {
    std::vector<long> by_parts(m_max(E) + 1, 0);
    for (const DistinctPartition& p : enumerate_distinct(E))
      ++by_parts[static_cast<long>(p.size())];
    for (long M = 0; M <= m_max(E); ++M) {
      if (phi_distinct(table, E, M) != by_parts[M]) {
        std::ostringstream os;
        os << "count mismatch at E=" << E << ", M=" << M;
        result.detail = os.str();
        return result;
      }
    }
    long om = 0;
    for (long v : by_parts) om += v;
    if (omega_distinct(table, E) != om) {
      result.detail = "omega mismatch at E=" + std::to_string(E);
      return result;
    }
  }
  if (omega_distinct(table, 10) != 10 || omega_distinct(table, 6) != 4) {
    result.detail = "fixed-value spot check failed";
    return result;
  }
  result.passed = true;
  result.detail =
      "recursion equals exhaustive enumeration for all E <= " +
      std::to_string(limit);
  return result;
}

CheckResult identity_check(double extra_b, int only_k) {
  CheckResult result;
  result.name = "fermion-boson-identity";
  std::vector<Real> grid = {Real("0.01"), Real("0.02"), Real("0.05"),
                            Real("0.1"),  Real("0.5"),  Real(1), Real(2)};
  if (extra_b > 0) grid.push_back(Real(extra_b));
  Real worst(0);
  int worst_k = -1;
  Real worst_b;
  for (const Real& b : grid) {
    for (int k = 0; k <= 4; ++k) {
      if (only_k >= 0 && k != only_k) continue;
      const Real r = fermion_boson_residual(k, b);
      if (r > worst) {
        worst = r;
        worst_k = k;
        worst_b = b;
      }
    }
  }
  result.passed = worst < Real("1e-12");
  std::ostringstream os;
  os << "max residual " << worst.str(3) << " (k=" << worst_k
     << ", b=" << worst_b.str(4) << "), contract 1e-12";
  result.detail = os.str();
  return result;
}

CheckResult asymptotics_check() {
  CheckResult result;
  result.name = "canonical-asymptotics";
  const Real b("0.01");
  const auto direct = canonical_cumulants_all(b);
  Real worst(0);
  for (int k = 1; k <= 3; ++k) {
    const Real a = asymptotic_canonical_cumulant(k, b);
    const Real rel = abs(a - direct[k]) / abs(direct[k]);
    if (rel > worst) worst = rel;
  }
  // The k=1 expansion must come out as ln2/b - 1/4 + b/48 exactly.
  const AsymptoticCoefficients c1 = asymptotic_cumulant_coefficients(1);
  const Real tol("1e-45");
  const bool verbatim = abs(c1.inv_b - ln2_value()) < tol &&
                        abs(c1.constant + Real(1) / 4) < tol &&
                        abs(c1.linear - Real(1) / 48) < tol;
  result.passed = worst < Real("1e-5") && verbatim;
  std::ostringstream os;
  os << "max |residue series - direct|/|direct| over k=1..3 at b=0.01: "
     << worst.str(3) << " (contract 1e-5); k=1 coefficients "
     << (verbatim ? "match" : "DO NOT match") << " ln2/b - 1/4 + b/48";
  result.detail = os.str();
  return result;
}

CheckResult constant_sign_check(int k) {
  CheckResult result;
  result.name = k == 0 ? "kappa0-constant-sign" : "kappa4-constant-sign";
  const Real b("0.01");
  const auto direct = canonical_cumulants_all(b);
  const AsymptoticCoefficients c = asymptotic_cumulant_coefficients(k);
  // Candidate constant terms differ only in sign; subtract the other two
  // residue contributions from the direct sum and compare.
  const Real observed = direct[k] - c.inv_b / b - c.linear * b;
  const Real computed = c.constant;
  const bool matches_computed = abs(observed - computed) < Real("1e-8");
  const bool matches_flipped = abs(observed + computed) < Real("1e-8");
  result.passed = matches_computed && !matches_flipped;
  std::ostringstream os;
  os << "direct summation gives constant term " << observed.str(12)
     << "; residue value " << computed.str(12)
     << (k == 0 ? " (= -ln2/2)" : " (= +1/16)")
     << (matches_computed ? " confirmed" : " NOT confirmed")
     << "; opposite sign rejected";
  result.detail = os.str();
  return result;
}

CheckResult skewness_scaling_check(const PartitionTable& table, long E) {
  CheckResult result;
  result.name = "skewness-scaling";
  const CumulantSet exact = exact_cumulants(micro_distribution(table, E));
  const Real scaled = exact.gamma1 * pow(Real(E), Real(1) / 4);

  // Candidate constants: the printed asymptotic law, and the constant the
  // printed closed-form cumulants imply (evaluated deep in the asymptotic
  // regime, where it converges to about -0.258).
  const Real printed("-0.12894");
  const long far = 1000000000000L;
  const AsymptoticCumulants a = asymptotic_cumulants(far);
  const Real implied = a.gamma1 * pow(Real(far), Real(1) / 4);

  const Real dev_printed = abs(scaled - printed) / abs(printed);
  const Real dev_implied = abs(scaled - implied) / abs(implied);
  const bool match_printed = dev_printed < Real("0.15");
  const bool match_implied = dev_implied < Real("0.15");
  result.passed = match_printed != match_implied;  // exactly one
  std::ostringstream os;
  os << "gamma1 * E^(1/4) = " << scaled.str(6) << " at E=" << E
     << "; deviation from " << printed.str(5) << ": " << dev_printed.str(3)
     << ", from closed-form constant " << implied.str(5) << ": "
     << dev_implied.str(3) << " -> matches " <<
      (match_printed ? printed.str(5) : implied.str(5))
     << " (constants differ by factor " << (implied / printed).str(5) << ")";
  result.detail = os.str();
  return result;
}

CheckResult excess_scaling_check(const PartitionTable& table, long E) {
  CheckResult result;
  result.name = "excess-scaling";
  const CumulantSet exact = exact_cumulants(micro_distribution(table, E));
  const Real scaled = exact.gamma2 * sqrt(Real(E));
  const Real printed("-1.2001");
  const Real dev = abs(scaled - printed) / abs(printed);
  result.passed = dev < Real("0.05");
  std::ostringstream os;
  os << "gamma2 * sqrt(E) = " << scaled.str(6) << " at E=" << E
     << ", asymptotic constant " << printed.str(5) << " (deviation "
     << dev.str(3) << ")";
  result.detail = os.str();
  return result;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  const PartitionTable table = build_table(options.table_energy);

  report.checks.push_back(recurrence_check(table, options.inject_table_fault));
  report.checks.push_back(oracle_check(table, options.oracle_limit));
  report.checks.push_back(identity_check(options.extra_b, options.only_k));
  report.checks.push_back(asymptotics_check());
  report.checks.push_back(constant_sign_check(0));
  report.checks.push_back(constant_sign_check(4));
  report.checks.push_back(skewness_scaling_check(table, options.table_energy));
  report.checks.push_back(excess_scaling_check(table, options.table_energy));
  return report;
}

void print_report(std::ostream& os, const VerificationReport& report) {
  for (const CheckResult& c : report.checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail
       << "\n";
  }
  os << (report.all_passed() ? "all checks passed" : "verification FAILED")
     << "\n";
}

}  // namespace distpart
