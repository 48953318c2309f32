#pragma once

#include "copa/copartition.hpp"

#include <cstddef>
#include <vector>

namespace copa {

/// One matched pair of phi: lambda_j is combined with pi_i.
struct PhiMatch {
    std::size_t lambda_index = 0;  // j, 1-based
    Part lambda_part = 0;
    std::size_t pi_index = 0;  // i, 1-based
    Part pi_part = 0;
    friend bool operator==(const PhiMatch&, const PhiMatch&) = default;
};

struct PhiResult {
    Partition mu;             // parts congruent to a+b mod m
    Copartition copartition;  // ground = unmatched pi parts
    std::size_t threshold = 0;  // k; nu(lambda)+1 when nothing is matched
    std::vector<PhiMatch> matches;
};

/// The bijection P_{a,m} x P_{b,m} -> P_{a+b,m} x CP_{a,b,m}. Requires
/// a, b >= 1 and pi, lambda in the right classes; throws
/// std::invalid_argument otherwise and std::logic_error if the matching
/// indices ever fail to be distinct and in range.
[[nodiscard]] PhiResult phi(const CopartitionParams& params, const Partition& pi, const Partition& lambda);

/// Row of the inverse table: the k-th smallest mu part and its j_k.
struct PhiInverseStep {
    Part mu_part = 0;
    std::size_t j = 0;
    friend bool operator==(const PhiInverseStep&, const PhiInverseStep&) = default;
};

struct PhiInverseResult {
    Partition pi;
    Partition lambda;
    std::vector<PhiInverseStep> steps;
};

[[nodiscard]] PhiInverseResult phi_inverse(const Partition& mu, const Copartition& c);

/// Even parts all below odd parts, odd parts with even multiplicity, and
/// among even parts only the largest has odd multiplicity.
[[nodiscard]] bool is_eo_star(const Partition& e);

/// (1,1,2)-copartitions of n to EO* partitions of 2n: every enlarged-sky
/// part twice, plus twice the conjugate of the ground.
[[nodiscard]] Partition copartition_to_eo(const Copartition& c);

/// Inverse of copartition_to_eo. Throws std::invalid_argument if `e` is not EO*.
[[nodiscard]] Copartition eo_to_copartition(const Partition& e);

/// Partitions of n to EO* partitions of n, by filtering.
[[nodiscard]] std::vector<Partition> enumerate_eo_star(int n);

/// (lambda of n-k, k) to a (1,1,1)-copartition of n with k ground parts.
[[nodiscard]] Copartition partition_to_cp111(const Partition& lambda, int k);

struct PartitionWithCount {
    Partition lambda;
    int k = 0;
    friend bool operator==(const PartitionWithCount&, const PartitionWithCount&) = default;
};

[[nodiscard]] PartitionWithCount cp111_to_partition(const Copartition& c);

/// A partition and one of its rim cells to a (0,0,1)-copartition of the same
/// size: the cell becomes the lower-right corner of the rectangle. Throws
/// std::invalid_argument if the cell is not on the rim.
[[nodiscard]] Copartition rim_cell_to_cp001(const Partition& lambda, Cell cell);

struct PartitionWithCell {
    Partition lambda;
    Cell cell;
    friend bool operator==(const PartitionWithCell&, const PartitionWithCell&) = default;
};

[[nodiscard]] PartitionWithCell cp001_to_rim_cell(const Copartition& c);

} // namespace copa
