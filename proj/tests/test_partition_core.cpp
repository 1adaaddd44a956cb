#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include <omp.h>

#include <distpart/enumerate.hpp>
#include <distpart/partition_table.hpp>

using namespace distpart;

TEST_CASE("m_max staircase boundaries") {
  CHECK(m_max(1) == 1);
  CHECK(m_max(2) == 1);
  CHECK(m_max(3) == 2);
  CHECK(m_max(10) == 4);   // 1+2+3+4
  CHECK(m_max(11) == 4);
  CHECK(m_max(4500) == 94);  // 94*95/2 = 4465 <= 4500 < 4560
  CHECK(m_max(4465) == 94);
  CHECK(m_max(4464) == 93);
  CHECK_THROWS_AS(m_max(0), std::invalid_argument);
}

TEST_CASE("table base rules and known cells") {
  const PartitionTable table = build_table(12, 12);
  CHECK(table.at(5, 5) == 1);
  CHECK(table.at(4, 5) == 0);
  CHECK(table.at(7, 3) == 4);  // 5+1+1, 4+2+1, 3+3+1, 3+2+2
  CHECK(table.at(1, 0) == 0);
  CHECK(table.at(0, 3) == 0);
  CHECK_THROWS_AS(table.at(0, 0), std::domain_error);
  CHECK_THROWS_AS(table.at(13, 1), std::out_of_range);
  CHECK_THROWS_AS(build_table(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_table(5, 0), std::invalid_argument);
}

TEST_CASE("parallel fill equals the serial reference") {
  const PartitionTable parallel = build_table(600);
  const PartitionTable serial = build_table_serial(600);
  CHECK(parallel == serial);

  // identical with any thread count
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const PartitionTable three = build_table(600);
  omp_set_num_threads(saved);
  CHECK(three == serial);
}

TEST_CASE("recursion holds on random cells") {
  const PartitionTable table = build_table(500);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pick_n(2, 500);
  for (int i = 0; i < 3000; ++i) {
    const long n = pick_n(rng);
    std::uniform_int_distribution<long> pick_k(
        1, std::min(n - 1, table.k_max()));
    const long k = pick_k(rng);
    CHECK(table.at(n, k) == table.at(n - 1, k - 1) + table.at(n - k, k));
  }
  CHECK(table.validate_recurrence());
}

TEST_CASE("validate_recurrence flags a corrupted cell") {
  const PartitionTable table = build_table(60);
  std::vector<BigInt> cells;
  for (long n = 0; n <= table.n_max(); ++n)
    for (long k = 0; k <= table.k_max(); ++k)
      cells.push_back(n == 0 && k == 0 ? BigInt(0) : table.at(n, k));
  cells[40 * (table.k_max() + 1) + 5] += 3;
  const PartitionTable corrupted(table.n_max(), table.k_max(),
                                 std::move(cells));
  std::string detail;
  CHECK_FALSE(corrupted.validate_recurrence(&detail));
  CHECK(!detail.empty());
}

TEST_CASE("phi against staircase shift and support") {
  const PartitionTable table = build_table(80);
  CHECK(phi_distinct(table, 10, 3) == 4);  // 7+2+1, 6+3+1, 5+4+1, 5+3+2
  CHECK(phi_distinct(table, 10, 4) == 1);  // 4+3+2+1
  CHECK(phi_distinct(table, 9, 4) == 0);   // 9 < 10, minimal distinct sum
  CHECK(phi_distinct(table, 10, 0) == 0);
  // support: phi > 0 exactly when 1 <= M and M(M+1)/2 <= E
  for (long E = 1; E <= 80; ++E)
    for (long M = 0; M <= m_max(E) + 2; ++M) {
      const bool inside = M >= 1 && M * (M + 1) / 2 <= E;
      CHECK((phi_distinct(table, E, M) > 0) == inside);
    }
}

TEST_CASE("omega totals") {
  const PartitionTable table = build_table(80);
  CHECK(omega_distinct(table, 3) == 2);   // 3, 2+1
  CHECK(omega_distinct(table, 6) == 4);   // 6, 5+1, 4+2, 3+2+1
  CHECK(omega_distinct(table, 10) == 10);
  // row sums match the total exactly
  for (long E : {17L, 42L, 80L}) {
    BigInt sum(0);
    for (long M = 0; M <= m_max(E); ++M) sum += phi_distinct(table, E, M);
    CHECK(sum == omega_distinct(table, E));
  }
}

TEST_CASE("enumeration oracle agrees with the recursion") {
  const PartitionTable table = build_table(40);
  for (long E = 1; E <= 40; ++E) {
    const auto all = enumerate_distinct(E);
    CHECK(BigInt(all.size()) == omega_distinct(table, E));
    std::vector<long> by_parts(m_max(E) + 1, 0);
    for (const auto& p : all) {
      // each tuple is strictly decreasing and sums to E
      long sum = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        sum += p[i];
        if (i > 0) CHECK(p[i] < p[i - 1]);
      }
      CHECK(sum == E);
      ++by_parts[p.size()];
    }
    for (long M = 0; M <= m_max(E); ++M)
      CHECK(BigInt(by_parts[M]) == phi_distinct(table, E, M));
  }
}

TEST_CASE("enumeration fixed cases and limits") {
  const auto all3 = enumerate_distinct(3);
  REQUIRE(all3.size() == 2);
  CHECK(all3[0] == DistinctPartition{3});
  CHECK(all3[1] == DistinctPartition{2, 1});
  const auto m4 = enumerate_distinct(10, 4);
  REQUIRE(m4.size() == 1);
  CHECK(m4[0] == DistinctPartition{4, 3, 2, 1});
  CHECK(enumerate_distinct(10, 3).size() == 4);
  CHECK_THROWS_AS(enumerate_distinct(81), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_distinct(0), std::invalid_argument);
}
