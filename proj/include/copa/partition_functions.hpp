#pragma once

#include "copa/checked_int.hpp"

#include <vector>

namespace copa {

/// p(n) via Euler's pentagonal recurrence.
[[nodiscard]] Count partition_count(int n);

/// p(0..n) via the pentagonal recurrence.
[[nodiscard]] std::vector<Count> partition_counts(int n);

/// p(n) via the part-bounded dynamic program. Independent of
/// `partition_count`; the two are cross-checked in tests.
[[nodiscard]] Count partition_count_dp(int n);

/// d(n). Throws std::invalid_argument for n < 1.
[[nodiscard]] Count divisor_count(int n);

/// Number of divisors of n congruent to `residue` (mod `modulus`).
[[nodiscard]] Count divisor_count_in_class(int n, int residue, int modulus);

struct PartitionStatistics {
    Count total_parts = 0;
    Count sum_largest_parts = 0;
    Count sum_perimeters = 0;
    Count parts_of_size_one = 0;
    Count diversity_sum = 0;
    Count spt = 0;  // appearances of the smallest part, summed
    friend bool operator==(const PartitionStatistics&, const PartitionStatistics&) = default;
};

/// Statistics over all partitions of n, computed by direct enumeration.
[[nodiscard]] PartitionStatistics partition_statistics(int n);

} // namespace copa
