#include "copa/bijections.hpp"
#include "copa/enumeration.hpp"
#include "copa/generating_functions.hpp"
#include "copa/json_io.hpp"
#include "copa/partition_functions.hpp"

#include <doctest.h>

using namespace copa;

namespace {

// Partitions of n with all parts in the given residues mod 5, by filtering.
std::vector<Count> mod5_partition_counts(std::initializer_list<int> residues, int max_n) {
    std::vector<Count> out;
    for (int n = 0; n <= max_n; ++n) {
        Count c = 0;
        for_each_partition(n, [&](const Partition& p) {
            bool ok = true;
            for (Part x : p.parts()) {
                bool hit = false;
                for (int r : residues) hit = hit || x % 5 == r;
                ok = ok && hit;
            }
            c += ok ? 1 : 0;
        });
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("product series of small examples") {
    CHECK(gf_product({1, 3, 4}, 12, Markers::Specialized).count(12) == 7);
    CHECK(gf_double_sum({1, 3, 4}, 12, Markers::Specialized).count(12) == 7);
    const TruncatedSeries f = gf_product({1, 1, 2}, 6);
    CHECK(f.coefficient(4, 1, 1) == 1);
    CHECK(f.coefficient(4, 2, 0) == 1);
    CHECK(f.coefficient(4, 0, 2) == 1);
    CHECK(f.coefficient(0, 0, 0) == 1);
    CHECK(f.count(4) == 5);
    CHECK_THROWS_AS((void)gf_product({0, 1, 1}, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)gf_sky_summed({1, 0, 1}, 5), std::invalid_argument);
}

TEST_CASE("product, double sum and intermediate forms agree") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int m = 1; m <= 4; ++m) {
                const CopartitionParams p{a, b, m};
                const TruncatedSeries product = gf_product(p, 30);
                REQUIRE(gf_double_sum(p, 30) == product);
                REQUIRE(gf_sky_summed(p, 30) == product);
                REQUIRE(gf_binomial_step(p, 30) == product);
                REQUIRE(gf_product({b, a, m}, 30) == product.swapped_markers());
                REQUIRE(gf_product(p, 30, Markers::Specialized) == product.specialized());
            }
        }
    }
}

TEST_CASE("refined coefficients match enumeration") {
    for (const CopartitionParams p : {CopartitionParams{1, 2, 3}, CopartitionParams{2, 2, 1}, CopartitionParams{0, 2, 2},
                                      CopartitionParams{3, 0, 2}, CopartitionParams{0, 0, 1}}) {
        const TruncatedSeries f = gf_double_sum(p, 16);
        for (int n = 0; n <= 16; ++n) {
            RefinedCount tally;
            for_each_copartition(p, n, [&](const Copartition& c) { ++tally.table[{c.ground_parts(), c.sky_parts()}]; });
            Count seen = 0;
            for (const auto& [key, count] : tally.table) {
                REQUIRE(f.coefficient(static_cast<std::size_t>(n), key.second, key.first) == count);
                seen += count;
            }
            REQUIRE(f.count(static_cast<std::size_t>(n)) == seen);
        }
    }
}

TEST_CASE("Rogers-Ramanujan functions") {
    const auto g = rr_function(RogersRamanujan::G, SeriesForm::Sum, 40).counts();
    const auto h = rr_function(RogersRamanujan::H, SeriesForm::Sum, 40).counts();
    CHECK(std::vector<Count>(g.begin(), g.begin() + 7) == std::vector<Count>{1, 1, 1, 1, 2, 2, 3});
    CHECK(std::vector<Count>(h.begin(), h.begin() + 8) == std::vector<Count>{1, 0, 1, 1, 1, 1, 2, 2});
    CHECK(g == mod5_partition_counts({1, 4}, 40));
    CHECK(h == mod5_partition_counts({2, 3}, 40));
    CHECK(rr_function(RogersRamanujan::G, SeriesForm::Product, 40).counts() == g);
    CHECK(rr_function(RogersRamanujan::H, SeriesForm::Product, 40).counts() == h);

    const VerificationReport rg = rr_copartition_check(RogersRamanujan::G, 60, 20);
    CHECK(rg.ok());
    CHECK(rg.suite() == "rr-G");
    CHECK(rg.attempted() > 0);
    CHECK(rr_copartition_check(RogersRamanujan::H, 60, 20).ok());
}

TEST_CASE("theta functions") {
    // f(-q,-q^2) is Euler's product: 1 - q - q^2 + q^5 + q^7 - ...
    CHECK(theta_f(1, 2, 12).counts() == std::vector<Count>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
    for (const auto& [x, y] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 5}, std::pair{1, 1}}) {
        CHECK(theta_f(x, y, 60) == theta_product(x, y, 60));
        CHECK(theta_f(x, y, 60) == theta_f(y, x, 60));
    }
    CHECK_THROWS_AS((void)theta_f(0, 0, 5), std::invalid_argument);
    for (const auto& [a, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 5}, std::pair{3, 7}}) {
        CHECK(eta_theta_quotient_check(a, m, 60).ok());
    }
    CHECK_THROWS_AS((void)eta_theta_quotient_check(2, 2, 10), std::invalid_argument);
}

TEST_CASE("mock theta nu and EO*") {
    const TruncatedSeries eo = eo_star_gf(30);
    for (std::size_t n = 1; n <= 30; n += 2) REQUIRE(eo.count(n) == 0);
    CHECK(eo.count(4) == 2);
    for (int n = 0; n <= 15; ++n) {
        const auto expected = static_cast<Count>(enumerate_eo_star(2 * n).size());
        REQUIRE(eo.count(static_cast<std::size_t>(2 * n)) == expected);
        REQUIRE(expected == count_copartitions({1, 1, 2}, n));
    }
    // Coefficients of nu and nu(-q) agree on even powers.
    const TruncatedSeries nu = mock_theta_nu(30);
    CHECK(nu.count(0) == 1);
    for (std::size_t n = 0; n <= 30; n += 2) REQUIRE(nu.count(n) == eo.count(n));
}

TEST_CASE("degenerate regimes") {
    for (const CopartitionParams p : {CopartitionParams{0, 1, 1}, CopartitionParams{0, 1, 2}, CopartitionParams{0, 2, 3},
                                      CopartitionParams{0, 3, 2}}) {
        const VerificationReport r = gf_degenerate_check(p, 40, 25);
        CHECK_MESSAGE(r.ok(), r.summary());
    }
    CHECK_THROWS_AS((void)gf_degenerate_check({1, 1, 1}, 10), std::invalid_argument);
    // Double sum covers a = b = 0: cp001(2) = 4.
    CHECK(gf_double_sum({0, 0, 1}, 5, Markers::Specialized).count(2) == 4);
    CHECK(gf_double_sum({0, 0, 1}, 5, Markers::Specialized).count(0) == 0);
}

TEST_CASE("series json") {
    const auto flat = to_json(TruncatedSeries::from_counts({1, 2}), false);
    CHECK(flat.dump() == R"([{"n":0,"coeff":1},{"n":1,"coeff":2}])");
    const auto marked = to_json(gf_product({1, 1, 2}, 2), true);
    CHECK(marked.dump() ==
          R"([{"n":0,"terms":[{"s":0,"w":0,"coeff":1}]},{"n":1,"terms":[{"s":0,"w":1,"coeff":1},{"s":1,"w":0,"coeff":1}]},)"
          R"({"n":2,"terms":[{"s":0,"w":2,"coeff":1},{"s":2,"w":0,"coeff":1}]}])");
}
