#include "copa/bijections.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace copa {

namespace {

bool in_class(Part part, int residue, int m) {
    return part >= residue && (part - residue) % m == 0;
}

void require_class(const Partition& p, int residue, int m, const char* name) {
    for (Part part : p.parts()) {
        if (!in_class(part, residue, m)) {
            throw std::invalid_argument(std::string(name) + " part " + std::to_string(part) + " is not >= " +
                                        std::to_string(residue) + " and congruent to it mod " + std::to_string(m));
        }
    }
}

void require_params(const CopartitionParams& params, int a, int b, int m, const char* what) {
    if (params != CopartitionParams{a, b, m}) {
        throw std::invalid_argument(std::string(what) + " needs " + CopartitionParams{a, b, m}.to_string() +
                                    ", got " + params.to_string());
    }
}

std::vector<Part> to_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

} // namespace

PhiResult phi(const CopartitionParams& params, const Partition& pi, const Partition& lambda) {
    params.validate();
    if (!params.standard()) throw std::invalid_argument("phi needs a, b >= 1");
    const auto [a, b, m] = params;
    require_class(pi, a, m, "pi");
    require_class(lambda, b, m, "lambda");

    const long n_pi = static_cast<long>(pi.num_parts());
    const long n_lambda = static_cast<long>(lambda.num_parts());
    // The left side decreases strictly in k, so the first hit is the threshold.
    long k = n_lambda + 1;
    for (long j = 1; j <= n_lambda; ++j) {
        if ((lambda.at(static_cast<std::size_t>(j)) - b) / m + n_lambda - j < n_pi) {
            k = j;
            break;
        }
    }

    PhiResult out;
    out.threshold = static_cast<std::size_t>(k);
    std::vector<bool> matched(static_cast<std::size_t>(n_pi) + 1, false);
    std::vector<Part> mu;
    long previous = 0;
    for (long j = k; j <= n_lambda; ++j) {
        const Part lj = lambda.at(static_cast<std::size_t>(j));
        const long i = n_pi - (n_lambda - j) - (lj - b) / m;
        if (i < 1 || i > n_pi || i <= previous) {
            throw std::logic_error("phi matched lambda_" + std::to_string(j) + " to invalid or repeated pi index " +
                                   std::to_string(i));
        }
        previous = i;
        const Part pi_part = pi.at(static_cast<std::size_t>(i));
        matched[static_cast<std::size_t>(i)] = true;
        out.matches.push_back({static_cast<std::size_t>(j), lj, static_cast<std::size_t>(i), pi_part});
        mu.push_back(lj + pi_part);
    }

    std::vector<Part> ground;
    for (long i = 1; i <= n_pi; ++i) {
        if (!matched[static_cast<std::size_t>(i)]) ground.push_back(pi.at(static_cast<std::size_t>(i)));
    }
    const auto lambda_parts = to_vector(lambda);
    const Partition fused(std::vector<Part>(lambda_parts.begin(), lambda_parts.begin() + (k - 1)));
    const Partition ground_partition(std::move(ground));
    SplitSky split = split_enlarged_sky(fused, ground_partition.num_parts(), params);

    out.mu = Partition::from_multiset(std::move(mu));
    out.copartition = make_copartition(params, ground_partition, std::move(split.sky));
    return out;
}

PhiInverseResult phi_inverse(const Partition& mu, const Copartition& c) {
    const CopartitionParams& params = c.params();
    if (!params.standard()) throw std::invalid_argument("phi_inverse needs a, b >= 1");
    const auto [a, b, m] = params;
    require_class(mu, a + b, m, "mu");

    const Partition& ground = c.ground();
    const std::size_t w = ground.num_parts();
    auto lambda = to_vector(enlarged_sky(c));
    auto pi = to_vector(ground);

    PhiInverseResult out;
    for (std::size_t k = 0; k < mu.num_parts(); ++k) {
        const Part part = mu.at(mu.num_parts() - k);
        // j = w reaches gamma_0, which is unbounded, so the search always stops.
        std::size_t j = 0;
        while (j < w && part - m * static_cast<long>(j) - b > ground.at(w - j)) ++j;
        const Part sky_part = m * static_cast<int>(j) + b;
        out.steps.push_back({part, j});
        lambda.push_back(sky_part);
        pi.push_back(part - sky_part);
    }
    out.pi = Partition::from_multiset(std::move(pi));
    out.lambda = Partition::from_multiset(std::move(lambda));
    require_class(out.pi, a, m, "recovered pi");
    require_class(out.lambda, b, m, "recovered lambda");
    return out;
}

bool is_eo_star(const Partition& e) {
    if (e.has_zero_parts()) return false;
    std::map<Part, std::size_t, std::greater<>> counts;
    for (Part part : e.parts()) ++counts[part];
    Part smallest_odd = std::numeric_limits<Part>::max();
    Part largest_even = 0;
    for (const auto& [part, count] : counts) {
        if (part % 2 != 0) {
            if (count % 2 != 0) return false;
            smallest_odd = std::min(smallest_odd, part);
        } else {
            const bool largest = largest_even == 0;
            if (largest) largest_even = part;
            if ((count % 2 != 0) != largest) return false;
        }
    }
    return largest_even < smallest_odd;
}

Partition copartition_to_eo(const Copartition& c) {
    require_params(c.params(), 1, 1, 2, "copartition_to_eo");
    std::vector<Part> parts;
    const Partition fused = enlarged_sky(c);
    const Partition columns = conjugate(c.ground());
    for (Part part : fused.parts()) parts.insert(parts.end(), 2, part);
    for (Part part : columns.parts()) parts.push_back(2 * part);
    return Partition::from_multiset(std::move(parts));
}

Copartition eo_to_copartition(const Partition& e) {
    if (!is_eo_star(e)) throw std::invalid_argument(e.to_string() + " is not an EO* partition");
    std::vector<Part> halved_evens;
    std::vector<Part> fused;
    bool keep = true;
    for (Part part : e.parts()) {
        if (part % 2 == 0) {
            halved_evens.push_back(part / 2);
        } else {
            // Odd parts come in equal adjacent pairs; keep one of each pair.
            if (keep) fused.push_back(part);
            keep = !keep;
        }
    }
    const CopartitionParams params{1, 1, 2};
    const Partition ground = conjugate(Partition(std::move(halved_evens)));
    SplitSky split = split_enlarged_sky(Partition(std::move(fused)), ground.num_parts(), params);
    return make_copartition(params, ground, std::move(split.sky));
}

std::vector<Partition> enumerate_eo_star(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (is_eo_star(p)) out.push_back(p);
    });
    return out;
}

Copartition partition_to_cp111(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("ground part count must be non-negative");
    const auto parts = to_vector(lambda);
    const auto split_at = std::find_if(parts.begin(), parts.end(), [k](Part part) { return part <= k; });
    std::vector<Part> rest{k};
    rest.insert(rest.end(), split_at, parts.end());
    std::erase(rest, 0);
    const CopartitionParams params{1, 1, 1};
    const Partition ground = conjugate(Partition(std::move(rest)));
    SplitSky split = split_enlarged_sky(Partition(std::vector<Part>(parts.begin(), split_at)),
                                        static_cast<std::size_t>(k), params);
    return make_copartition(params, ground, std::move(split.sky));
}

PartitionWithCount cp111_to_partition(const Copartition& c) {
    require_params(c.params(), 1, 1, 1, "cp111_to_partition");
    auto parts = to_vector(enlarged_sky(c));
    const auto columns = to_vector(conjugate(c.ground()));
    if (!columns.empty()) parts.insert(parts.end(), columns.begin() + 1, columns.end());
    return {Partition(std::move(parts)), static_cast<int>(c.ground_parts())};
}

Copartition rim_cell_to_cp001(const Partition& lambda, Cell cell) {
    if (!is_rim_cell(lambda, cell)) {
        throw std::invalid_argument("(" + std::to_string(cell.row) + "," + std::to_string(cell.column) +
                                    ") is not a rim cell of " + lambda.to_string());
    }
    const Partition columns = conjugate(lambda);
    std::vector<Part> sky;
    for (int r = 1; r <= cell.row; ++r) sky.push_back(lambda.at(static_cast<std::size_t>(r)) - cell.column);
    std::vector<Part> ground;
    for (int t = 1; t <= cell.column; ++t) ground.push_back(columns.at(static_cast<std::size_t>(t)) - cell.row);
    return make_copartition({0, 0, 1}, Partition::with_zeros(std::move(ground)), Partition::with_zeros(std::move(sky)));
}

PartitionWithCell cp001_to_rim_cell(const Copartition& c) {
    require_params(c.params(), 0, 0, 1, "cp001_to_rim_cell");
    const int w = static_cast<int>(c.ground_parts());
    const int s = static_cast<int>(c.sky_parts());
    std::vector<Part> rows;
    for (Part part : c.sky().parts()) rows.push_back(part + w);
    std::vector<Part> below;
    for (Part part : c.ground().parts()) {
        if (part > 0) below.push_back(part);
    }
    const Partition columns = conjugate(Partition(std::move(below)));
    for (Part part : columns.parts()) rows.push_back(part);
    return {Partition(std::move(rows)), Cell{s, w}};
}

} // namespace copa
