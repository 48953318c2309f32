#include "copa/copartition.hpp"
#include "copa/enumeration.hpp"
#include "copa/json_io.hpp"

#include <doctest.h>

using namespace copa;

namespace {

CopartitionErrorCode error_code(const CopartitionParams& p, Partition g, Partition s) {
    try {
        (void)make_copartition(p, std::move(g), std::move(s));
    } catch (const CopartitionError& e) {
        return e.code();
    }
    FAIL("expected a CopartitionError");
    return CopartitionErrorCode::InvalidParams;
}

}  // namespace

TEST_CASE("make_copartition and size") {
    const Copartition c = make_copartition({1, 3, 4}, {5}, {3});
    CHECK(c.size() == 12);
    CHECK(c.rectangle() == Partition{4});
    CHECK(c.to_string() == "(1,3,4):([5],[4],[3])");

    const Copartition empty = make_copartition({1, 1, 2}, {}, {});
    CHECK(empty.size() == 0);
    CHECK(empty.empty());
    CHECK(Copartition{}.params() == CopartitionParams{1, 1, 1});

    const Copartition degenerate = make_copartition({0, 1, 1}, Partition::with_zeros({0}), {1});
    CHECK(degenerate.size() == 2);
    CHECK(degenerate.rectangle() == Partition{1});

    // No ground parts: the rectangle has zero-width rows and renders empty.
    const Copartition sky_only = make_copartition({2, 1, 3}, {}, {4, 1});
    CHECK(sky_only.rectangle().empty());
    CHECK(sky_only.size() == 5);
}

TEST_CASE("validation errors are distinct") {
    using E = CopartitionErrorCode;
    CHECK(error_code({1, 3, 4}, {2}, {}) == E::GroundResidue);
    CHECK(error_code({1, 3, 4}, {}, {5}) == E::SkyResidue);
    CHECK(error_code({5, 3, 4}, {1}, {}) == E::GroundBelowMinimum);
    CHECK(error_code({1, 7, 4}, {}, {3}) == E::SkyBelowMinimum);
    CHECK(error_code({1, 1, 1}, Partition::with_zeros({1, 0}), {}) == E::ForbiddenZeroGroundPart);
    CHECK(error_code({1, 1, 1}, {}, Partition::with_zeros({0})) == E::ForbiddenZeroSkyPart);
    CHECK(error_code({0, 1, 1}, Partition::with_zeros({0}), {}) == E::EmptySkyWithZeroA);
    CHECK(error_code({1, 0, 1}, {}, Partition::with_zeros({0})) == E::EmptyGroundWithZeroB);
    CHECK(error_code({1, 1, 0}, {}, {}) == E::InvalidParams);
    CHECK(error_code({-1, 1, 1}, {}, {}) == E::InvalidParams);
}

TEST_CASE("enlarged sky") {
    // (a,b,m) = (1,2,4): rho = {4m,4m,4m}, sigma = {2m+b,2m+b,b}.
    const Copartition c = make_copartition({1, 2, 4}, {1, 1, 1, 1}, {10, 10, 2});
    CHECK(enlarged_sky(c) == Partition{26, 26, 18});
    CHECK(enlarged_sky(make_copartition({1, 2, 4}, {5}, {})).empty());
    CHECK(enlarged_sky(make_copartition({1, 3, 4}, {1}, {7})) == Partition{11});
}

TEST_CASE("split enlarged sky") {
    // {5m+b,4m+b,4m+b,4m+b} with 3 ground parts, m = 4, b = 2.
    const CopartitionParams p{1, 2, 4};
    const SplitSky split = split_enlarged_sky({22, 18, 18, 18}, 3, p);
    CHECK(split.rectangle == Partition{12, 12, 12, 12});
    CHECK(split.sky == Partition{10, 6, 6, 6});

    const SplitSky none = split_enlarged_sky({}, 7, p);
    CHECK(none.rectangle.empty());
    CHECK(none.sky.empty());

    try {
        (void)split_enlarged_sky({10}, 3, p);
        FAIL("expected SplitPartTooSmall");
    } catch (const CopartitionError& e) {
        CHECK(e.code() == CopartitionErrorCode::SplitPartTooSmall);
    }
    CHECK_THROWS_AS((void)split_enlarged_sky({15}, 1, p), CopartitionError);

    for (const CopartitionParams params : {CopartitionParams{1, 2, 4}, CopartitionParams{0, 1, 2}, CopartitionParams{2, 0, 1},
                                           CopartitionParams{0, 0, 1}, CopartitionParams{1, 1, 1}}) {
        for (int n = 0; n <= 20; ++n) {
            for_each_copartition(params, n, [&](const Copartition& c) {
                const SplitSky s = split_enlarged_sky(enlarged_sky(c), c.ground_parts(), params);
                REQUIRE(s.sky == c.sky());
                REQUIRE(s.rectangle == c.rectangle());
            });
        }
    }
}

TEST_CASE("conjugation") {
    const Copartition c = make_copartition({1, 3, 4}, {5}, {3});
    const Copartition d = conjugate(c);
    CHECK(d.params() == CopartitionParams{3, 1, 4});
    CHECK(d.ground() == Partition{3});
    CHECK(d.sky() == Partition{5});
    CHECK(conjugate(Copartition{}) == Copartition{});

    for (const CopartitionParams params : {CopartitionParams{1, 3, 4}, CopartitionParams{2, 2, 3}, CopartitionParams{0, 1, 1},
                                           CopartitionParams{0, 0, 2}}) {
        for (int n = 0; n <= 20; ++n) {
            for_each_copartition(params, n, [&](const Copartition& x) {
                const Copartition y = conjugate(x);
                REQUIRE(conjugate(y) == x);
                REQUIRE(y.size() == x.size());
                REQUIRE(crank(y) == -crank(x));
            });
        }
    }
}

TEST_CASE("scaling") {
    const Copartition c = make_copartition({1, 3, 4}, {5}, {3});
    const Copartition s = scale(c, 2);
    CHECK(s.params() == CopartitionParams{2, 6, 8});
    CHECK(s.ground() == Partition{10});
    CHECK(s.sky() == Partition{6});
    CHECK(s.size() == 24);
    CHECK(scale(c, 1) == c);
    CHECK(unscale(s, 2) == c);
    CHECK_THROWS_AS((void)unscale(c, 2), CopartitionError);
    CHECK_THROWS_AS((void)scale(c, 0), std::invalid_argument);
    CHECK(count_copartitions({2, 6, 8}, 24) == 7);
    CHECK(count_copartitions({1, 3, 4}, 12) == 7);
}

TEST_CASE("crank") {
    CHECK(crank(make_copartition({1, 1, 2}, {3, 1}, {})) == 2);
    CHECK(crank(Copartition{}) == 0);
    CHECK(crank(make_copartition({1, 1, 2}, {1}, {1})) == 0);
}

TEST_CASE("json round trip") {
    const Copartition c = make_copartition({0, 1, 2}, Partition::with_zeros({2, 2, 2, 0}), {7, 3, 1, 1});
    CHECK(to_json_line(c) == R"({"a":0,"b":1,"m":2,"ground":[2,2,2,0],"sky":[7,3,1,1]})");
    CHECK(copartition_from_json(to_json(c)) == c);

    using nlohmann::ordered_json;
    CHECK_THROWS_AS((void)copartition_from_json(ordered_json::parse(R"({"a":1,"b":3,"m":4,"ground":[2],"sky":[]})")),
                    CopartitionError);
    CHECK_THROWS_AS((void)copartition_from_json(ordered_json::parse(R"({"a":1,"b":3,"m":4,"ground":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)copartition_from_json(ordered_json::parse(R"({"a":"1","b":3,"m":4,"ground":[],"sky":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)copartition_from_json(ordered_json::parse(R"({"a":1,"b":3,"m":4,"ground":[1,5],"sky":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)copartition_from_json(ordered_json::parse("[1,2]")), std::invalid_argument);

    for (int n = 0; n <= 12; ++n) {
        for_each_copartition({0, 0, 1}, n, [&](const Copartition& x) {
            REQUIRE(copartition_from_json(ordered_json::parse(to_json_line(x))) == x);
        });
    }
}
