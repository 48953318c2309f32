#include "copa/partition_functions.hpp"

#include "copa/partition.hpp"

#include <stdexcept>

namespace copa {

std::vector<Count> partition_counts(int n) {
    if (n < 0) throw std::invalid_argument("p(n) needs n >= 0");
    std::vector<Count> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Count total = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            if (g1 > k) break;
            const int g2 = j * (3 * j + 1) / 2;
            Count term = p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) term = checked_add(term, p[static_cast<std::size_t>(k - g2)]);
            total = (j % 2 == 1) ? checked_add(total, term) : checked_sub(total, term);
        }
        p[static_cast<std::size_t>(k)] = total;
    }
    return p;
}

Count partition_count(int n) {
    return partition_counts(n).back();
}

Count partition_count_dp(int n) {
    if (n < 0) throw std::invalid_argument("p(n) needs n >= 0");
    std::vector<Count> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int total = part; total <= n; ++total) {
            auto t = static_cast<std::size_t>(total);
            ways[t] = checked_add(ways[t], ways[t - static_cast<std::size_t>(part)]);
        }
    }
    return ways.back();
}

Count divisor_count(int n) {
    return divisor_count_in_class(n, 0, 1);
}

Count divisor_count_in_class(int n, int residue, int modulus) {
    if (n < 1) throw std::invalid_argument("divisor counts need n >= 1");
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const int r = ((residue % modulus) + modulus) % modulus;
    Count count = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d == 0 && d % modulus == r) ++count;
    }
    return count;
}

PartitionStatistics partition_statistics(int n) {
    PartitionStatistics stats;
    for_each_partition(n, [&](const Partition& lambda) {
        if (lambda.empty()) return;
        stats.total_parts += static_cast<Count>(lambda.num_parts());
        stats.sum_largest_parts += lambda.largest();
        stats.sum_perimeters += perimeter(lambda);
        stats.parts_of_size_one += static_cast<Count>(lambda.multiplicity(1));
        stats.diversity_sum += static_cast<Count>(diversity(lambda));
        stats.spt += static_cast<Count>(lambda.multiplicity(lambda.smallest()));
    });
    return stats;
}

} // namespace copa
