#include "copa/enumeration.hpp"

#include "copa/generating_functions.hpp"
#include "copa/partition_functions.hpp"

#include <algorithm>

namespace copa {

namespace {

struct PartBounds {
    std::size_t min_ground = 0;
    std::size_t max_ground = 0;
    std::size_t min_sky = 0;
    std::size_t max_sky = 0;
};

// With a = 0 the sky is nonempty, so m * w <= n bounds the ground count even
// though zero ground parts cost nothing; b = 0 is symmetric.
PartBounds part_bounds(const CopartitionParams& p, int n) {
    PartBounds out;
    out.min_ground = p.b == 0 ? 1 : 0;
    out.min_sky = p.a == 0 ? 1 : 0;
    out.max_ground = static_cast<std::size_t>(p.a >= 1 ? n / p.a : n / p.m);
    out.max_sky = static_cast<std::size_t>(p.b >= 1 ? n / p.b : n / p.m);
    return out;
}

long minimal_size(const CopartitionParams& p, std::size_t w, std::size_t s) {
    const long lw = static_cast<long>(w);
    const long ls = static_cast<long>(s);
    return p.a * lw + p.m * lw * ls + p.b * ls;
}

RestrictedPartitionSpec side_spec(int residue, int m, std::size_t count) {
    RestrictedPartitionSpec spec;
    spec.residue = residue;
    spec.modulus = m;
    spec.min_part = residue;
    spec.exact_num_parts = count;
    spec.allow_zero_parts = residue == 0;
    return spec;
}

// All partitions with exactly `count` parts of the given class and total size
// at most `max_size`, in reverse-lexicographic order.
std::vector<Partition> side_partitions(int residue, int m, std::size_t count, int max_size) {
    std::vector<Partition> out;
    for (int size = 0; size <= max_size; ++size) {
        auto block = enumerate_restricted(size, side_spec(residue, m, count));
        out.insert(out.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
    }
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

// at_most[w][k]: partitions of k into at most w parts.
std::vector<std::vector<Count>> at_most_table(std::size_t max_parts, int max_size) {
    std::vector<std::vector<Count>> t(max_parts + 1, std::vector<Count>(static_cast<std::size_t>(max_size) + 1, 0));
    for (std::size_t w = 0; w <= max_parts; ++w) {
        t[w][0] = 1;
        for (int k = 1; k <= max_size; ++k) {
            const auto uk = static_cast<std::size_t>(k);
            Count v = w == 0 ? 0 : t[w - 1][uk];
            if (w >= 1 && uk >= w) v = checked_add(v, t[w][uk - w]);
            t[w][uk] = v;
        }
    }
    return t;
}

// Partitions of `size` into exactly `count` parts, each >= residue and
// congruent to it mod m: subtracting the residue from every part leaves
// multiples of m, i.e. a partition of (size - count*residue)/m into at most
// `count` parts.
Count side_count(const std::vector<std::vector<Count>>& at_most, int residue, int m, std::size_t count, long size) {
    const long rest = size - static_cast<long>(count) * residue;
    if (rest < 0 || rest % m != 0) return 0;
    if (count == 0) return rest == 0 ? 1 : 0;
    return at_most[count][static_cast<std::size_t>(rest / m)];
}

} // namespace

void for_each_copartition(const CopartitionParams& params, int n,
                          const std::function<void(const Copartition&)>& visit) {
    params.validate();
    if (n < 0) throw std::invalid_argument("copartition size must be non-negative");
    const PartBounds bounds = part_bounds(params, n);
    for (std::size_t w = bounds.min_ground; w <= bounds.max_ground; ++w) {
        if (minimal_size(params, w, bounds.min_sky) > n) break;
        for (std::size_t s = bounds.min_sky; s <= bounds.max_sky; ++s) {
            const long base = minimal_size(params, w, s);
            if (base > n) break;
            const int rest = n - params.m * static_cast<int>(w * s);
            const auto grounds = side_partitions(params.a, params.m, w, rest);
            std::map<long, std::vector<Partition>> skies;
            for (const auto& ground : grounds) {
                const long sky_size = rest - ground.size();
                auto it = skies.find(sky_size);
                if (it == skies.end()) {
                    it = skies.emplace(sky_size, enumerate_restricted(static_cast<int>(sky_size),
                                                                      side_spec(params.b, params.m, s)))
                             .first;
                }
                for (const auto& sky : it->second) visit(make_copartition(params, ground, sky));
            }
        }
    }
}

std::vector<Copartition> enumerate_copartitions(const CopartitionParams& params, int n) {
    std::vector<Copartition> out;
    for_each_copartition(params, n, [&](const Copartition& c) { out.push_back(c); });
    return out;
}

Count RefinedCount::at(std::size_t ground_parts, std::size_t sky_parts) const {
    auto it = table.find({ground_parts, sky_parts});
    return it == table.end() ? 0 : it->second;
}

Count RefinedCount::total() const {
    Count sum = 0;
    for (const auto& [key, value] : table) sum = checked_add(sum, value);
    return sum;
}

RefinedCount RefinedCount::transposed() const {
    RefinedCount out;
    for (const auto& [key, value] : table) out.table[{key.second, key.first}] = value;
    return out;
}

RefinedCount count_refined(const CopartitionParams& params, int n) {
    params.validate();
    if (n < 0) throw std::invalid_argument("copartition size must be non-negative");
    const PartBounds bounds = part_bounds(params, n);
    const auto at_most = at_most_table(std::max(bounds.max_ground, bounds.max_sky), n);
    RefinedCount out;
    for (std::size_t w = bounds.min_ground; w <= bounds.max_ground; ++w) {
        for (std::size_t s = bounds.min_sky; s <= bounds.max_sky; ++s) {
            if (minimal_size(params, w, s) > n) break;
            const long rest = n - static_cast<long>(params.m) * static_cast<long>(w * s);
            Count total = 0;
            for (long g = 0; g <= rest; ++g) {
                const Count grounds = side_count(at_most, params.a, params.m, w, g);
                if (grounds == 0) continue;
                total = checked_add(total, checked_mul(grounds, side_count(at_most, params.b, params.m, s, rest - g)));
            }
            if (total != 0) out.table[{w, s}] = total;
        }
    }
    return out;
}

Count count_copartitions(const CopartitionParams& params, int n, CountMethod method) {
    params.validate();
    if (n < 0) throw std::invalid_argument("copartition size must be non-negative");
    switch (method) {
    case CountMethod::Enumeration: {
        Count total = 0;
        for_each_copartition(params, n, [&](const Copartition&) { ++total; });
        return total;
    }
    case CountMethod::Series:
        return gf_double_sum(params, static_cast<std::size_t>(n), Markers::Specialized).count(static_cast<std::size_t>(n));
    case CountMethod::Formula:
        return count_formula(params, n);
    case CountMethod::Auto:
        break;
    }
    if (n <= kEnumerationThreshold) return count_copartitions(params, n, CountMethod::Enumeration);
    if (params.standard()) {
        return gf_product(params, static_cast<std::size_t>(n), Markers::Specialized).count(static_cast<std::size_t>(n));
    }
    if (has_closed_form(params)) return count_formula(params, n);
    return count_refined(params, n).total();
}

Count CrankTally::total() const {
    Count sum = 0;
    for (Count c : counts) sum = checked_add(sum, c);
    return sum;
}

bool CrankTally::equidistributed() const {
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>{}) == counts.end();
}

CrankTally crank_tally(const CopartitionParams& params, int n, int modulus) {
    if (modulus < 1) throw std::invalid_argument("crank modulus must be positive");
    CrankTally out;
    out.modulus = modulus;
    out.counts.assign(static_cast<std::size_t>(modulus), 0);
    for_each_copartition(params, n, [&](const Copartition& c) {
        const long r = ((crank(c) % modulus) + modulus) % modulus;
        ++out.counts[static_cast<std::size_t>(r)];
    });
    return out;
}

bool has_closed_form(const CopartitionParams& params) {
    const auto& [a, b, m] = params;
    if (m < 1 || a < 0 || b < 0) return false;
    if (a == 1 && b == 1 && m == 1) return true;
    if (a == 0 && b == 0) return m == 1;
    if (a == 0) return b <= m;
    if (b == 0) return a <= m;
    return false;
}

Count count_formula(const CopartitionParams& params, int n) {
    params.validate();
    if (n < 0) throw std::invalid_argument("copartition size must be non-negative");
    if (!has_closed_form(params)) throw NoClosedForm("no closed form for " + params.to_string());
    const auto p = partition_counts(n);
    const auto& [a, b, m] = params;

    if (a == 1 && b == 1 && m == 1) {
        Count sum = 0;
        for (Count v : p) sum = checked_add(sum, v);
        return sum;
    }
    if (a == 0 && b == 0) {
        if (n == 0) return 0;
        return checked_sub(checked_mul(2, count_formula({0, 1, 1}, n)), p[static_cast<std::size_t>(n)]);
    }
    if (b == 0) return count_formula({b, a, m}, n);

    // (0,b,m): the sky-count divisor d runs over divisors of n - mk that are
    // congruent to b and at least b; for b <= m the second condition is free.
    Count sum = 0;
    for (int k = 0; m * k < n; ++k) {
        const Count d = divisor_count_in_class(n - m * k, b, m);
        sum = checked_add(sum, checked_mul(p[static_cast<std::size_t>(k)], d));
    }
    return sum;
}

} // namespace copa
