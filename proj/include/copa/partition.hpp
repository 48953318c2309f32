#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copa {

using Part = int;

/// A non-increasing finite sequence of part sizes.
///
/// The default constructor path is strict: every part must be positive.
/// Zero parts only appear through `Partition::with_zeros`, which is how the
/// grounds and skies of degenerate copartitions are built. `{2}` and `{2,0}`
/// are different values.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if `parts` is not non-increasing or
    /// contains a part < 1.
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts);

    /// Same as the constructor but zero parts are accepted.
    static Partition with_zeros(std::vector<Part> parts);

    /// Sorts `parts` into non-increasing order first (strict mode).
    static Partition from_multiset(std::vector<Part> parts);

    /// Parses the canonical text form, e.g. "[9,5,5,1]" or "[]".
    static Partition parse(std::string_view text);

    [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t num_parts() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] long size() const noexcept;

    /// 1-based access, largest part first.
    [[nodiscard]] Part at(std::size_t index) const;
    [[nodiscard]] Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    [[nodiscard]] Part smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    [[nodiscard]] std::size_t multiplicity(Part value) const noexcept;
    [[nodiscard]] bool has_zero_parts() const noexcept { return !parts_.empty() && parts_.back() == 0; }

    /// Canonical text form: "[9,5,5,5,5,1,1,1]"; zero parts are rendered.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    struct Unchecked {};
    Partition(Unchecked, std::vector<Part> parts) : parts_(std::move(parts)) {}

    std::vector<Part> parts_;
};

/// A cell of a Young diagram, 1-based (row, column).
struct Cell {
    int row = 0;
    int column = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Column heights of the Young diagram. Throws on zero parts.
[[nodiscard]] Partition conjugate(const Partition& lambda);

/// Number of distinct part sizes.
[[nodiscard]] std::size_t diversity(const Partition& lambda);

/// Largest part + number of parts - 1; the empty partition has perimeter 0.
[[nodiscard]] long perimeter(const Partition& lambda);

/// Cells with no cell diagonally below-right, walked from the top-right
/// end of the first row to the bottom of the first column.
[[nodiscard]] std::vector<Cell> rim_cells(const Partition& lambda);

[[nodiscard]] bool is_rim_cell(const Partition& lambda, Cell cell);

/// Calls `visit` for every partition of n in reverse-lexicographic order.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// All partitions of n in reverse-lexicographic order.
[[nodiscard]] std::vector<Partition> enumerate_partitions(int n);

struct RestrictedPartitionSpec {
    int residue = 0;           // parts are congruent to residue (mod modulus)
    int modulus = 1;
    int min_part = 1;
    std::optional<std::size_t> exact_num_parts;
    bool allow_zero_parts = false;
};

/// Partitions of n whose parts are congruent to `residue` (mod `modulus`),
/// at least `min_part`, optionally with an exact number of parts. Zero parts
/// count as parts when allowed. Constraints that admit nothing give an empty
/// list. Throws std::invalid_argument when zero parts are allowed without a
/// fixed part count (the set would be infinite) or with min_part > 0.
[[nodiscard]] std::vector<Partition> enumerate_restricted(int n, const RestrictedPartitionSpec& spec);

} // namespace copa

template <>
struct std::hash<copa::Partition> {
    std::size_t operator()(const copa::Partition& p) const noexcept;
};
