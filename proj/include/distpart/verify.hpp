#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <distpart/types.hpp>

namespace distpart {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  long oracle_limit = 60;    // exhaustive-enumeration range
  long table_energy = 4500;  // table size for the scaling checks
  double extra_b = 0;        // optional additional identity grid point
  int only_k = -1;           // restrict identity grid to one cumulant order
  bool inject_table_fault = false;  // corrupt one cell before the
                                    // recurrence check (test hook)
};

/*
 * The self-verification suite behind `distpart verify`:
 *  - recursion spot-check of the partition table,
 *  - equality of the counting recursion with exhaustive enumeration,
 *  - fermion-boson cumulant identity on a b-grid,
 *  - residue asymptotics against direct summation at b = 0.01, including
 *    the numerically resolved constant terms of kappa^(0) and kappa^(4),
 *  - scaling of exact skewness/excess against the two candidate
 *    asymptotic constants.
 */
VerificationReport run_verification(const VerifyOptions& options = {});

void print_report(std::ostream& os, const VerificationReport& report);

}  // namespace distpart
