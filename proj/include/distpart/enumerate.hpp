#pragma once

#include <vector>

#include <distpart/types.hpp>

namespace distpart {

/// A partition into distinct parts, stored strictly decreasing.
using DistinctPartition = std::vector<long>;

/// Exhaustive enumeration is the independent oracle for the counting
/// recursion; it is deliberately capped at small E.
inline constexpr long enumeration_limit = 80;

/// All partitions of E into distinct parts, in lexicographically
/// decreasing order. Throws std::invalid_argument for E < 1 or
/// E > enumeration_limit.
std::vector<DistinctPartition> enumerate_distinct(long E);

/// Same, restricted to exactly M parts.
std::vector<DistinctPartition> enumerate_distinct(long E, long M);

}  // namespace distpart
