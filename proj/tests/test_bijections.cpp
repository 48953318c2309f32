#include "copa/bijections.hpp"
#include "copa/enumeration.hpp"
#include "copa/partition_functions.hpp"

#include <doctest.h>

#include <set>

using namespace copa;

namespace {

std::vector<Partition> in_class_up_to(int max_n, int r, int m) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_n; ++n) {
        for (const Partition& p : enumerate_restricted(n, {r, m, r, std::nullopt, false})) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("phi worked example") {
    const CopartitionParams p{1, 2, 4};
    const Partition pi{9, 5, 5, 5, 5, 1, 1, 1};
    const Partition lambda{26, 26, 26, 22, 6, 6, 2};
    const PhiResult r = phi(p, pi, lambda);
    CHECK(r.threshold == 5);
    CHECK(r.mu == Partition{11, 7, 3});
    CHECK(r.copartition == make_copartition(p, {9, 5, 5, 5, 1}, {6, 6, 6, 2}));
    REQUIRE(r.matches.size() == 3);
    CHECK(r.matches[0] == PhiMatch{5, 6, 5, 5});
    CHECK(r.matches[1] == PhiMatch{6, 6, 6, 1});
    CHECK(r.matches[2] == PhiMatch{7, 2, 8, 1});
    CHECK(r.mu.size() + r.copartition.size() == pi.size() + lambda.size());

    const PhiInverseResult inv = phi_inverse(r.mu, r.copartition);
    CHECK(inv.steps == std::vector<PhiInverseStep>{{3, 0}, {7, 1}, {11, 1}});
    CHECK(inv.pi == pi);
    CHECK(inv.lambda == lambda);
}

TEST_CASE("phi edge cases") {
    const CopartitionParams p{1, 1, 2};
    const PhiResult empty = phi(p, {}, {});
    CHECK(empty.mu.empty());
    CHECK(empty.copartition == make_copartition(p, {}, {}));
    CHECK(empty.threshold == 1);

    // Nothing to match against: lambda becomes the enlarged sky of an empty ground.
    const PhiResult sky_only = phi(p, {}, {5, 3});
    CHECK(sky_only.threshold == 3);
    CHECK(sky_only.copartition.sky() == Partition{5, 3});

    CHECK_THROWS_AS((void)phi(p, {2}, {}), std::invalid_argument);
    CHECK_THROWS_AS((void)phi(p, {}, {4}), std::invalid_argument);
    CHECK_THROWS_AS((void)phi({0, 1, 1}, {}, {1}), std::invalid_argument);
    CHECK_THROWS_AS((void)phi_inverse({3}, make_copartition(p, {}, {})), std::invalid_argument);
}

TEST_CASE("phi is a size-preserving bijection") {
    for (const CopartitionParams p : {CopartitionParams{1, 2, 4}, CopartitionParams{1, 1, 2}, CopartitionParams{2, 3, 5},
                                      CopartitionParams{3, 1, 3}}) {
        const int max_n = 16;
        const auto pis = in_class_up_to(max_n, p.a, p.m);
        const auto lambdas = in_class_up_to(max_n, p.b, p.m);
        std::set<std::pair<Partition, Copartition>> images;
        std::size_t inputs = 0;
        for (const Partition& pi : pis) {
            for (const Partition& lambda : lambdas) {
                if (pi.size() + lambda.size() > max_n) continue;
                ++inputs;
                const PhiResult r = phi(p, pi, lambda);
                REQUIRE(r.mu.size() + r.copartition.size() == pi.size() + lambda.size());
                for (Part x : r.mu.parts()) REQUIRE((x - p.a - p.b) % p.m == 0);
                const PhiInverseResult inv = phi_inverse(r.mu, r.copartition);
                REQUIRE(inv.pi == pi);
                REQUIRE(inv.lambda == lambda);
                images.insert({r.mu, r.copartition});
            }
        }
        REQUIRE(images.size() == inputs);
    }
}

TEST_CASE("EO* examples") {
    CHECK(is_eo_star(Partition{4}));
    CHECK(is_eo_star(Partition{1, 1, 1, 1}));
    CHECK(is_eo_star(Partition{5, 5, 4, 2, 2}));
    CHECK(is_eo_star(Partition{}));
    CHECK_FALSE(is_eo_star(Partition{2, 2}));
    CHECK_FALSE(is_eo_star(Partition{2, 1, 1}));
    CHECK_FALSE(is_eo_star(Partition{3}));
    CHECK_FALSE(is_eo_star(Partition{4, 2}));

    const CopartitionParams p{1, 1, 2};
    CHECK(copartition_to_eo(make_copartition(p, {1, 1}, {})) == Partition{4});
    CHECK(copartition_to_eo(make_copartition(p, {}, {1, 1})) == Partition{1, 1, 1, 1});
    CHECK(copartition_to_eo(make_copartition(p, {3, 1}, {1})) == Partition{5, 5, 4, 2, 2});
    CHECK(eo_to_copartition(Partition{5, 5, 4, 2, 2}) == make_copartition(p, {3, 1}, {1}));
    CHECK_THROWS_AS((void)eo_to_copartition(Partition{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)copartition_to_eo(make_copartition({1, 1, 1}, {1}, {})), std::invalid_argument);
}

TEST_CASE("EO* map is a bijection with twice the size and crank") {
    for (int n = 0; n <= 13; ++n) {
        const auto eo = enumerate_eo_star(2 * n);
        std::set<Partition> remaining(eo.begin(), eo.end());
        for_each_copartition({1, 1, 2}, n, [&](const Copartition& c) {
            const Partition e = copartition_to_eo(c);
            REQUIRE(e.size() == 2 * n);
            REQUIRE(remaining.erase(e) == 1);
            REQUIRE(eo_to_copartition(e) == c);
        });
        REQUIRE(remaining.empty());
        REQUIRE(enumerate_eo_star(2 * n + 1).empty());
    }
}

TEST_CASE("cp111 example and bijection") {
    const Copartition c = partition_to_cp111({8, 6, 5, 3}, 5);
    CHECK(c == make_copartition({1, 1, 1}, {3, 3, 3, 2, 2}, {3, 1}));
    CHECK(c.rectangle() == Partition{5, 5});
    CHECK(cp111_to_partition(c) == PartitionWithCount{{8, 6, 5, 3}, 5});
    CHECK(partition_to_cp111({}, 0) == Copartition{});
    CHECK_THROWS_AS((void)partition_to_cp111({1}, -1), std::invalid_argument);

    for (int n = 0; n <= 14; ++n) {
        std::set<Copartition> image;
        for (int k = 0; k <= n; ++k) {
            for_each_partition(n - k, [&](const Partition& lambda) {
                const Copartition x = partition_to_cp111(lambda, k);
                REQUIRE(x.size() == n);
                REQUIRE(x.ground_parts() == static_cast<std::size_t>(k));
                REQUIRE(cp111_to_partition(x) == PartitionWithCount{lambda, k});
                REQUIRE(image.insert(x).second);
            });
        }
        const auto all = enumerate_copartitions({1, 1, 1}, n);
        REQUIRE(image == std::set<Copartition>(all.begin(), all.end()));
    }
}

TEST_CASE("rim cell example and bijection") {
    const Partition lambda{8, 6, 5, 5, 3, 3};
    const Copartition c = rim_cell_to_cp001(lambda, {4, 4});
    CHECK(c == make_copartition({0, 0, 1}, Partition::with_zeros({2, 2, 2, 0}), Partition::with_zeros({4, 2, 1, 1})));
    CHECK(c.rectangle() == Partition{4, 4, 4, 4});
    CHECK(cp001_to_rim_cell(c) == PartitionWithCell{lambda, {4, 4}});
    CHECK_THROWS_AS((void)rim_cell_to_cp001(lambda, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)rim_cell_to_cp001(lambda, {7, 1}), std::invalid_argument);

    for (int n = 1; n <= 12; ++n) {
        std::set<Copartition> image;
        for_each_partition(n, [&](const Partition& p) {
            for (const Cell cell : rim_cells(p)) {
                const Copartition x = rim_cell_to_cp001(p, cell);
                REQUIRE(x.size() == n);
                REQUIRE(cp001_to_rim_cell(x) == PartitionWithCell{p, cell});
                REQUIRE(image.insert(x).second);
            }
        });
        const auto all = enumerate_copartitions({0, 0, 1}, n);
        REQUIRE(image == std::set<Copartition>(all.begin(), all.end()));
    }
}
