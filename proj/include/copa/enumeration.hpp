#pragma once

#include "copa/checked_int.hpp"
#include "copa/copartition.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace copa {

/// Sizes up to this bound are counted by enumeration when the method is Auto.
inline constexpr int kEnumerationThreshold = 40;

enum class CountMethod { Auto, Enumeration, Series, Formula };

/// Calls `visit` for every copartition of size n, ordered by ascending
/// (ground parts, sky parts), then ground in reverse-lexicographic order,
/// then sky in reverse-lexicographic order.
void for_each_copartition(const CopartitionParams& params, int n,
                          const std::function<void(const Copartition&)>& visit);

[[nodiscard]] std::vector<Copartition> enumerate_copartitions(const CopartitionParams& params, int n);

/// Counts keyed by (ground parts w, sky parts s).
struct RefinedCount {
    std::map<std::pair<std::size_t, std::size_t>, Count> table;

    [[nodiscard]] Count at(std::size_t ground_parts, std::size_t sky_parts) const;
    [[nodiscard]] Count total() const;
    /// Swaps the roles of ground and sky, as conjugation does.
    [[nodiscard]] RefinedCount transposed() const;

    friend bool operator==(const RefinedCount&, const RefinedCount&) = default;
};

/// Refined count from a product of restricted partition counts per (w, s)
/// block; independent of both enumeration and the series engine.
[[nodiscard]] RefinedCount count_refined(const CopartitionParams& params, int n);

[[nodiscard]] Count count_copartitions(const CopartitionParams& params, int n,
                                       CountMethod method = CountMethod::Auto);

struct CrankTally {
    int modulus = 1;
    std::vector<Count> counts;  // indexed by residue 0..modulus-1

    [[nodiscard]] Count total() const;
    [[nodiscard]] bool equidistributed() const;
    friend bool operator==(const CrankTally&, const CrankTally&) = default;
};

[[nodiscard]] CrankTally crank_tally(const CopartitionParams& params, int n, int modulus);

class NoClosedForm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

[[nodiscard]] bool has_closed_form(const CopartitionParams& params);

/// Closed-form counts, evaluated without enumeration:
///   (1,1,1):                 sum_{k<=n} p(k)
///   (0,b,m), 1 <= b <= m:    sum_{k<n/m} p(k) d_{b,m}(n - mk)
///   (0,0,1):                 2 cp_{0,1,1}(n) - p(n) for n >= 1, and 0 at n = 0
/// plus the mirror images (b,0,m) through conjugation. Throws NoClosedForm
/// for every other family.
[[nodiscard]] Count count_formula(const CopartitionParams& params, int n);

} // namespace copa
