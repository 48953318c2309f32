#include "copa/enumeration.hpp"
#include "copa/json_io.hpp"
#include "copa/partition_functions.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace copa;

namespace {

bool in_class(const Partition& p, int r, int m) {
    return std::all_of(p.parts().begin(), p.parts().end(), [&](Part x) { return x >= r && (x - r) % m == 0; });
}

// Every pair of ordinary partitions, filtered, then padded with zero parts
// when the regime allows them. Shares nothing with the library generator.
std::set<Copartition> brute_force(const CopartitionParams& p, int n) {
    std::set<Copartition> out;
    for (int g = 0; g <= n; ++g) {
        for (const auto& ground : enumerate_partitions(g)) {
            if (!in_class(ground, p.a == 0 ? p.m : p.a, p.m)) continue;
            for (int s = 0; g + s <= n; ++s) {
                for (const auto& sky : enumerate_partitions(s)) {
                    if (!in_class(sky, p.b == 0 ? p.m : p.b, p.m)) continue;
                    for (int gz = 0; gz <= (p.a == 0 ? n : 0); ++gz) {
                        for (int sz = 0; sz <= (p.b == 0 ? n : 0); ++sz) {
                            std::vector<Part> gp(ground.parts().begin(), ground.parts().end());
                            std::vector<Part> sp(sky.parts().begin(), sky.parts().end());
                            gp.insert(gp.end(), static_cast<std::size_t>(gz), 0);
                            sp.insert(sp.end(), static_cast<std::size_t>(sz), 0);
                            const long w = static_cast<long>(gp.size());
                            const long k = static_cast<long>(sp.size());
                            if (g + s + p.m * w * k != n) continue;
                            if (p.a == 0 && k == 0) continue;
                            if (p.b == 0 && w == 0) continue;
                            out.insert(make_copartition(p, Partition::with_zeros(gp), Partition::with_zeros(sp)));
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("the seven (1,3,4)-copartitions of 12") {
    const CopartitionParams p{1, 3, 4};
    const auto all = enumerate_copartitions(p, 12);
    const std::set<Copartition> expected{
        make_copartition(p, {9, 1, 1, 1}, {}),
        make_copartition(p, {5, 5, 1, 1}, {}),
        make_copartition(p, {5, 1, 1, 1, 1, 1, 1, 1}, {}),
        make_copartition(p, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {}),
        make_copartition(p, {5}, {3}),
        make_copartition(p, {1}, {7}),
        make_copartition(p, {}, {3, 3, 3, 3}),
    };
    CHECK(all.size() == 7);
    CHECK(std::set<Copartition>(all.begin(), all.end()) == expected);
}

TEST_CASE("small counts") {
    CHECK(count_copartitions({1, 1, 2}, 4) == 5);
    CHECK(count_copartitions({1, 1, 1}, 2) == 4);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            CHECK(enumerate_copartitions({a, b, 2}, 0) == std::vector<Copartition>{make_copartition({a, b, 2}, {}, {})});
        }
    }
    const auto zero = enumerate_copartitions({0, 0, 1}, 2);
    const std::vector<Copartition> expected{
        make_copartition({0, 0, 1}, Partition::with_zeros({1}), Partition::with_zeros({0})),
        make_copartition({0, 0, 1}, Partition::with_zeros({0}), Partition::with_zeros({1})),
        make_copartition({0, 0, 1}, Partition::with_zeros({0}), Partition::with_zeros({0, 0})),
        make_copartition({0, 0, 1}, Partition::with_zeros({0, 0}), Partition::with_zeros({0})),
    };
    CHECK(std::set<Copartition>(zero.begin(), zero.end()) == std::set<Copartition>(expected.begin(), expected.end()));
    CHECK(zero.size() == 4);
    CHECK(enumerate_copartitions({0, 0, 1}, 0).empty());
    CHECK(enumerate_copartitions({0, 1, 1}, 0).empty());
}

TEST_CASE("canonical order") {
    const auto all = enumerate_copartitions({1, 1, 2}, 4);
    const std::vector<std::string> lines{
        R"({"a":1,"b":1,"m":2,"ground":[],"sky":[3,1]})",
        R"({"a":1,"b":1,"m":2,"ground":[],"sky":[1,1,1,1]})",
        R"({"a":1,"b":1,"m":2,"ground":[1],"sky":[1]})",
        R"({"a":1,"b":1,"m":2,"ground":[3,1],"sky":[]})",
        R"({"a":1,"b":1,"m":2,"ground":[1,1,1,1],"sky":[]})",
    };
    REQUIRE(all.size() == lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) CHECK(to_json_line(all[i]) == lines[i]);
}

TEST_CASE("enumeration matches the brute-force oracle") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int m = 1; m <= 3; ++m) {
                const CopartitionParams p{a, b, m};
                for (int n = 0; n <= 10; ++n) {
                    const auto all = enumerate_copartitions(p, n);
                    const std::set<Copartition> unique(all.begin(), all.end());
                    REQUIRE(unique.size() == all.size());
                    REQUIRE(unique == brute_force(p, n));
                }
            }
        }
    }
}

TEST_CASE("refined counts") {
    const RefinedCount r = count_refined({1, 1, 2}, 4);
    const RefinedCount expected{{{{2, 0}, 1}, {{4, 0}, 1}, {{0, 2}, 1}, {{0, 4}, 1}, {{1, 1}, 1}}};
    CHECK(r == expected);
    CHECK(r.at(1, 1) == 1);
    CHECK(r.at(3, 3) == 0);
    CHECK(r.total() == 5);
    CHECK(r.transposed().at(2, 0) == 1);
    CHECK(r.transposed().at(0, 2) == 1);

    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int m = 1; m <= 3; ++m) {
                const CopartitionParams p{a, b, m};
                for (int n = 0; n <= 18; ++n) {
                    RefinedCount tally;
                    for_each_copartition(p, n, [&](const Copartition& c) { ++tally.table[{c.ground_parts(), c.sky_parts()}]; });
                    REQUIRE(count_refined(p, n) == tally);
                    REQUIRE(count_refined({b, a, m}, n) == tally.transposed());
                }
            }
        }
    }
}

TEST_CASE("count methods agree") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int m = 1; m <= 3; ++m) {
                const CopartitionParams p{a, b, m};
                for (int n = 0; n <= 20; ++n) {
                    const Count e = count_copartitions(p, n, CountMethod::Enumeration);
                    REQUIRE(count_copartitions(p, n, CountMethod::Series) == e);
                    REQUIRE(count_copartitions(p, n) == e);
                    if (has_closed_form(p)) REQUIRE(count_formula(p, n) == e);
                }
            }
        }
    }
    // Above the enumeration threshold Auto uses the series or the formula.
    CHECK(count_copartitions({1, 1, 1}, 60) == count_formula({1, 1, 1}, 60));
    CHECK(count_copartitions({0, 1, 1}, 60) == count_formula({0, 1, 1}, 60));
    CHECK(count_copartitions({0, 0, 2}, 45) == count_refined({0, 0, 2}, 45).total());
}

TEST_CASE("closed forms") {
    CHECK(count_formula({1, 1, 1}, 3) == 7);
    CHECK(count_formula({0, 1, 1}, 2) == 3);
    CHECK(count_formula({0, 0, 1}, 3) == 9);
    CHECK(count_formula({0, 0, 1}, 0) == 0);
    CHECK(count_formula({1, 0, 1}, 5) == count_formula({0, 1, 1}, 5));
    CHECK_THROWS_AS((void)count_formula({1, 3, 4}, 5), NoClosedForm);
    CHECK_THROWS_AS((void)count_formula({0, 3, 2}, 5), NoClosedForm);
    CHECK_THROWS_AS((void)count_formula({0, 0, 2}, 5), NoClosedForm);
    CHECK(has_closed_form({0, 2, 3}));
    CHECK_FALSE(has_closed_form({1, 1, 2}));

    for (int n = 0; n <= 40; ++n) {
        Count partial = 0;
        for (int k = 0; k <= n; ++k) partial += partition_count(k);
        REQUIRE(count_formula({1, 1, 1}, n) == partial);
        REQUIRE(count_formula({1, 1, 1}, n) == count_copartitions({1, 1, 1}, n, CountMethod::Enumeration));
        for (const auto& [b, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 3}}) {
            REQUIRE(count_formula({0, b, m}, n) == count_copartitions({0, b, m}, n, CountMethod::Enumeration));
        }
        REQUIRE(count_formula({0, 0, 1}, n) == count_copartitions({0, 0, 1}, n, CountMethod::Enumeration));
    }
}

TEST_CASE("crank tallies") {
    const CrankTally t = crank_tally({1, 1, 2}, 4, 5);
    CHECK(t.counts == std::vector<Count>{1, 1, 1, 1, 1});
    CHECK(t.equidistributed());
    const CrankTally zero = crank_tally({1, 1, 2}, 0, 5);
    CHECK(zero.counts == std::vector<Count>{1, 0, 0, 0, 0});
    CHECK_FALSE(zero.equidistributed());
    const CrankTally nine = crank_tally({1, 1, 2}, 9, 5);
    CHECK(nine.equidistributed());
    CHECK(nine.total() == count_copartitions({1, 1, 2}, 9));
    CHECK(nine.counts[0] * 5 == nine.total());
    CHECK_THROWS_AS((void)crank_tally({1, 1, 2}, 4, 0), std::invalid_argument);
}
