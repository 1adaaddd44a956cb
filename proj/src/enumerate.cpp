#include <distpart/enumerate.hpp>

#include <stdexcept>

namespace distpart {

namespace {

void extend(long remaining, long largest_allowed, DistinctPartition& prefix,
            std::vector<DistinctPartition>& out) {
  // Parts at most p, all distinct, can sum to at most p(p+1)/2.
  for (long p = std::min(largest_allowed, remaining); p >= 1; --p) {
    if (p * (p + 1) / 2 < remaining) break;
    prefix.push_back(p);
    if (p == remaining) {
      out.push_back(prefix);
    } else {
      extend(remaining - p, p - 1, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DistinctPartition> enumerate_distinct(long E) {
  if (E < 1) throw std::invalid_argument("enumerate_distinct: E must be >= 1");
  if (E > enumeration_limit)
    throw std::invalid_argument(
        "enumerate_distinct: E above the exhaustive-oracle limit");
  std::vector<DistinctPartition> out;
  DistinctPartition prefix;
  extend(E, E, prefix, out);
  return out;
}

std::vector<DistinctPartition> enumerate_distinct(long E, long M) {
  std::vector<DistinctPartition> all = enumerate_distinct(E);
  std::vector<DistinctPartition> filtered;
  for (auto& p : all)
    if (static_cast<long>(p.size()) == M) filtered.push_back(std::move(p));
  return filtered;
}

}  // namespace distpart
