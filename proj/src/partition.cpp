#include "copa/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace copa {

namespace {

void require_non_increasing(const std::vector<Part>& parts, Part min_allowed) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < min_allowed) {
            throw std::invalid_argument("partition part " + std::to_string(parts[i]) + " is below " +
                                        std::to_string(min_allowed));
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
}

int floor_to_residue(int value, int residue, int modulus) {
    // Largest v <= value with v == residue (mod modulus); may be negative.
    int r = ((value - residue) % modulus + modulus) % modulus;
    return value - r;
}

struct RestrictedGenerator {
    int residue;
    int modulus;
    int smallest;  // smallest admissible part
    std::optional<std::size_t> exact;
    std::vector<Part> current;
    std::vector<Partition>* out;

    void run(int remaining, int max_part) {
        if (exact) {
            if (current.size() == *exact) {
                if (remaining == 0) out->push_back(Partition::with_zeros(current));
                return;
            }
            auto slots = static_cast<long>(*exact - current.size());
            if (remaining < slots * smallest || remaining > slots * max_part) return;
        } else if (remaining == 0) {
            out->push_back(Partition::with_zeros(current));
            return;
        }
        int start = std::min(max_part, floor_to_residue(remaining, residue, modulus));
        for (int part = start; part >= smallest; part -= modulus) {
            current.push_back(part);
            run(remaining - part, part);
            current.pop_back();
        }
    }
};

} // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    require_non_increasing(parts_, 1);
}

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Partition Partition::with_zeros(std::vector<Part> parts) {
    require_non_increasing(parts, 0);
    return Partition(Unchecked{}, std::move(parts));
}

Partition Partition::from_multiset(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("partition text must look like [p1,p2,...]");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<Part> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        Part value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad partition part '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return with_zeros(std::move(parts));
}

long Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Part Partition::at(std::size_t index) const {
    if (index == 0 || index > parts_.size()) {
        throw std::out_of_range("partition index " + std::to_string(index) + " out of range");
    }
    return parts_[index - 1];
}

std::size_t Partition::multiplicity(Part value) const noexcept {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.has_zero_parts()) {
        throw std::invalid_argument("conjugate is undefined for partitions with zero parts");
    }
    std::vector<Part> columns(static_cast<std::size_t>(lambda.largest()), 0);
    for (Part part : lambda.parts()) {
        for (Part c = 0; c < part; ++c) ++columns[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(columns));
}

std::size_t diversity(const Partition& lambda) {
    auto parts = lambda.parts();
    if (parts.empty()) return 0;
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] != parts[i - 1]) ++distinct;
    }
    return distinct;
}

long perimeter(const Partition& lambda) {
    if (lambda.empty()) return 0;
    return static_cast<long>(lambda.largest()) + static_cast<long>(lambda.num_parts()) - 1;
}

std::vector<Cell> rim_cells(const Partition& lambda) {
    if (lambda.has_zero_parts()) {
        throw std::invalid_argument("rim cells are undefined for partitions with zero parts");
    }
    std::vector<Cell> cells;
    auto parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Part below = i + 1 < parts.size() ? parts[i + 1] : 0;
        Part leftmost = std::max(below, 1);
        for (Part column = parts[i]; column >= leftmost; --column) {
            cells.push_back({static_cast<int>(i + 1), column});
        }
    }
    return cells;
}

bool is_rim_cell(const Partition& lambda, Cell cell) {
    if (cell.row < 1 || cell.column < 1) return false;
    auto row = static_cast<std::size_t>(cell.row);
    if (row > lambda.num_parts() || cell.column > lambda.at(row)) return false;
    if (row == lambda.num_parts()) return true;
    return lambda.at(row + 1) < cell.column + 1;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Part> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            visit(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_restricted(int n, const RestrictedPartitionSpec& spec) {
    if (spec.modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (spec.allow_zero_parts && spec.min_part != 0) {
        throw std::invalid_argument("zero parts require min_part = 0");
    }
    if (spec.allow_zero_parts && !spec.exact_num_parts) {
        throw std::invalid_argument("zero parts require a fixed number of parts");
    }
    std::vector<Partition> out;
    if (n < 0) return out;

    const int residue = ((spec.residue % spec.modulus) + spec.modulus) % spec.modulus;
    int smallest = std::max(spec.min_part, spec.allow_zero_parts ? 0 : 1);
    smallest += ((residue - smallest) % spec.modulus + spec.modulus) % spec.modulus;

    const int top = floor_to_residue(n, residue, spec.modulus);
    if (top < smallest) {
        if (n == 0 && spec.exact_num_parts.value_or(0) == 0) out.emplace_back();
        return out;
    }
    RestrictedGenerator gen{residue, spec.modulus, smallest, spec.exact_num_parts, {}, &out};
    gen.run(n, top);
    return out;
}

} // namespace copa

std::size_t std::hash<copa::Partition>::operator()(const copa::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (copa::Part part : p.parts()) {
        h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= p.num_parts();
    return h;
}
