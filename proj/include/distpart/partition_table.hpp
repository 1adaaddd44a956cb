#pragma once

#include <string>
#include <vector>

#include <distpart/types.hpp>

namespace distpart {

/*
 * Dense table of P(n,k) = number of partitions of n into exactly k positive
 * parts, filled by the recursion
 *
 *   P(n,k) = 0               for k = 0 or k > n,
 *   P(n,n) = 1,
 *   P(n,k) = P(n-1,k-1) + P(n-k,k)   otherwise.
 *
 * The table is immutable after construction and safe for concurrent reads.
 * Cell (0,0) is intentionally undefined: the recursion never consults it,
 * and reading it is an error.
 */
class PartitionTable {
 public:
  /// Wrap a pre-filled row-major cell vector of size (n_max+1)*(k_max+1).
  /// No validation is performed; used by the builders, by tests that need
  /// a deliberately corrupted table, and by nothing else.
  PartitionTable(long n_max, long k_max, std::vector<BigInt> cells);

  long n_max() const { return n_max_; }
  long k_max() const { return k_max_; }

  /// Bounds-checked read. Throws std::out_of_range outside the table and
  /// std::domain_error for the undefined cell (0,0).
  const BigInt& at(long n, long k) const;

  /// Re-check the recursion, the diagonal rule and the zero rules over
  /// every cell. On failure writes the offending cell into `detail`
  /// (if given) and returns false.
  bool validate_recurrence(std::string* detail = nullptr) const;

  bool operator==(const PartitionTable& other) const;

 private:
  long n_max_;
  long k_max_;
  std::vector<BigInt> cells_;
};

/// Largest M with M(M+1)/2 <= E, in exact integer arithmetic.
long m_max(long E);

/// Build the table with the OpenMP row-parallel fill. k_max < 0 selects
/// the default m_max(n_max), the widest column ever consulted by
/// phi_distinct for E <= n_max.
PartitionTable build_table(long n_max, long k_max = -1);

/// Single-threaded reference fill; identical cells, kept for tests and
/// the kernel benchmark.
PartitionTable build_table_serial(long n_max, long k_max = -1);

/// Number of partitions of E into exactly M distinct parts,
/// Phi(E,M) = P(E - M(M-1)/2, M). Zero when M = 0 or the shifted
/// argument drops below M; otherwise requires table coverage.
BigInt phi_distinct(const PartitionTable& table, long E, long M);

/// Total number of partitions of E into distinct parts,
/// Omega(E) = sum over M of Phi(E,M).
BigInt omega_distinct(const PartitionTable& table, long E);

}  // namespace distpart
