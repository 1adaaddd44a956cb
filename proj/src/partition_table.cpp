#include <distpart/partition_table.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

namespace distpart {

long m_max(long E) {
  if (E < 1) throw std::invalid_argument("m_max: E must be >= 1");
  const BigInt disc = BigInt(8) * E + 1;
  BigInt root = sqrt(disc);  // floor square root
  long m = ((root - 1) / 2).convert_to<long>();
  while ((m + 1) * (m + 2) / 2 <= E) ++m;
  while (m > 0 && m * (m + 1) / 2 > E) --m;
  return m;
}

PartitionTable::PartitionTable(long n_max, long k_max,
                               std::vector<BigInt> cells)
    : n_max_(n_max), k_max_(k_max), cells_(std::move(cells)) {
  if (n_max_ < 1 || k_max_ < 1)
    throw std::invalid_argument("PartitionTable: bounds must be positive");
  if (cells_.size() !=
      static_cast<std::size_t>(n_max_ + 1) * static_cast<std::size_t>(k_max_ + 1))
    throw std::invalid_argument("PartitionTable: cell vector has wrong size");
}

const BigInt& PartitionTable::at(long n, long k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > k_max_)
    throw std::out_of_range("PartitionTable::at: index outside table");
  if (n == 0 && k == 0)
    throw std::domain_error("PartitionTable::at: cell (0,0) is undefined");
  return cells_[static_cast<std::size_t>(n) * (k_max_ + 1) + k];
}

bool PartitionTable::operator==(const PartitionTable& other) const {
  return n_max_ == other.n_max_ && k_max_ == other.k_max_ &&
         cells_ == other.cells_;
}

bool PartitionTable::validate_recurrence(std::string* detail) const {
  auto fail = [&](long n, long k, const char* what) {
    if (detail) {
      std::ostringstream os;
      os << what << " violated at (n=" << n << ", k=" << k << ")";
      *detail = os.str();
    }
    return false;
  };
  for (long n = 1; n <= n_max_; ++n) {
    for (long k = 1; k <= k_max_; ++k) {
      const BigInt& cell = at(n, k);
      if (k > n) {
        if (cell != 0) return fail(n, k, "k > n zero rule");
      } else if (k == n) {
        if (cell != 1) return fail(n, k, "diagonal rule");
      } else if (cell != at(n - 1, k - 1) + at(n - k, k)) {
        return fail(n, k, "recursion");
      }
    }
    if (at(n, 0) != 0) return fail(n, 0, "k = 0 zero rule");
  }
  if (detail) {
    std::ostringstream os;
    os << "all " << n_max_ * k_max_ << " cells consistent";
    *detail = os.str();
  }
  return true;
}

namespace {

long resolve_k_max(long n_max, long k_max) {
  if (n_max < 1) throw std::invalid_argument("build_table: n_max must be >= 1");
  if (k_max < 0) return m_max(n_max);
  if (k_max < 1) throw std::invalid_argument("build_table: k_max must be >= 1");
  return k_max;
}

}  // namespace

PartitionTable build_table(long n_max, long k_max) {
  k_max = resolve_k_max(n_max, k_max);
  const long stride = k_max + 1;
  std::vector<BigInt> cells(static_cast<std::size_t>(n_max + 1) * stride);

  // Row n only reads rows n-1 and n-k, so the cells of one row are
  // independent; the implicit barrier of the worksharing loop orders the
  // rows.
#pragma omp parallel
  {
    for (long n = 1; n <= n_max; ++n) {
      const long upper = std::min(n, k_max);
#pragma omp for schedule(static)
      for (long k = 1; k <= upper; ++k) {
        BigInt& cell = cells[static_cast<std::size_t>(n) * stride + k];
        if (k == n) {
          cell = 1;
        } else {
          cell = cells[static_cast<std::size_t>(n - 1) * stride + (k - 1)] +
                 cells[static_cast<std::size_t>(n - k) * stride + k];
        }
      }
    }
  }
  return PartitionTable(n_max, k_max, std::move(cells));
}

PartitionTable build_table_serial(long n_max, long k_max) {
  k_max = resolve_k_max(n_max, k_max);
  const long stride = k_max + 1;
  std::vector<BigInt> cells(static_cast<std::size_t>(n_max + 1) * stride);
  for (long n = 1; n <= n_max; ++n) {
    const long upper = std::min(n, k_max);
    for (long k = 1; k <= upper; ++k) {
      BigInt& cell = cells[static_cast<std::size_t>(n) * stride + k];
      if (k == n) {
        cell = 1;
      } else {
        cell = cells[static_cast<std::size_t>(n - 1) * stride + (k - 1)] +
               cells[static_cast<std::size_t>(n - k) * stride + k];
      }
    }
  }
  return PartitionTable(n_max, k_max, std::move(cells));
}

BigInt phi_distinct(const PartitionTable& table, long E, long M) {
  if (E < 1) throw std::invalid_argument("phi_distinct: E must be >= 1");
  if (M < 0) throw std::invalid_argument("phi_distinct: M must be >= 0");
  if (M == 0) return BigInt(0);
  // Staircase shift: subtracting 0+1+...+(M-1) maps distinct parts onto
  // ordinary partitions into exactly M parts.
  const long shifted = E - M * (M - 1) / 2;
  if (shifted < M) return BigInt(0);
  if (E > table.n_max() || M > table.k_max())
    throw std::out_of_range("phi_distinct: table does not cover (E, M)");
  return table.at(shifted, M);
}

BigInt omega_distinct(const PartitionTable& table, long E) {
  if (E < 1) throw std::invalid_argument("omega_distinct: E must be >= 1");
  if (E > table.n_max())
    throw std::out_of_range("omega_distinct: table does not cover E");
  BigInt total(0);
  const long top = m_max(E);
  for (long M = 1; M <= top; ++M) total += phi_distinct(table, E, M);
  return total;
}

}  // namespace distpart
