#include "copa/partition_functions.hpp"
#include "copa/series.hpp"

#include <doctest.h>

#include <random>

using namespace copa;

namespace {

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> degree(0, 2);
    std::bernoulli_distribution present(0.3);
    TruncatedSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (!present(rng)) continue;
        Polynomial p;
        for (int t = 0; t < 2; ++t) p.add_term({degree(rng), degree(rng)}, coeff(rng));
        s.set_coefficient(n, p);
    }
    if (unit_constant) s.set_coefficient(0, Polynomial(1));
    return s;
}

// Direct O(N^2) product of univariate coefficient lists.
std::vector<Count> convolve(const std::vector<Count>& a, const std::vector<Count>& b) {
    std::vector<Count> out(std::min(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial basics") {
    Polynomial p;
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());
    p.add_term({2, 1}, 5);
    p.add_term({}, 2);
    CHECK(p.coefficient({2, 1}) == 5);
    CHECK(p.at_one() == 7);
    CHECK(p.swapped().coefficient({1, 2}) == 5);
    Polynomial q;
    q.add_product(p, p);
    CHECK(q.coefficient({4, 2}) == 25);
    CHECK(q.coefficient({2, 1}) == 20);
    CHECK(q.at_one() == 49);
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer({1, 0, 0, 1}, 1, std::nullopt, true, 5).counts() == std::vector<Count>{1, 1, 2, 3, 5, 7});
    CHECK(pochhammer({1, 0, 0, 1}, 1, std::nullopt, false, 5).counts() == std::vector<Count>{1, -1, -1, 0, 0, 1});
    CHECK(pochhammer({1, 0, 0, 1}, 1, std::nullopt, false, 0).counts() == std::vector<Count>{1});
    // (-q;q)_inf: partitions into distinct parts.
    CHECK(pochhammer({-1, 0, 0, 1}, 1, std::nullopt, false, 8).counts() == std::vector<Count>{1, 1, 1, 2, 2, 3, 4, 5, 6});
    // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
    CHECK(pochhammer({1, 0, 0, 1}, 1, 3, false, 7).counts() == std::vector<Count>{1, -1, -1, 0, 1, 1, -1, 0});
    // 1/(xq;q)_inf: x marks the number of parts.
    const TruncatedSeries marked = pochhammer({1, 1, 0, 1}, 1, std::nullopt, true, 6);
    CHECK(marked.coefficient(6, 2, 0) == 3);
    CHECK(marked.coefficient(6, 6, 0) == 1);
    CHECK(marked.count(6) == 11);

    CHECK_THROWS_AS((void)pochhammer({1, 0, 0, 0}, 1, std::nullopt, true, 4), std::domain_error);
    CHECK_THROWS_AS((void)pochhammer({1, 0, 0, 1}, 0, std::nullopt, true, 4), std::invalid_argument);
    // (1;q)_inf vanishes identically.
    CHECK(pochhammer({1, 0, 0, 0}, 1, std::nullopt, false, 4).counts() == std::vector<Count>(5, 0));

    const auto p = partition_counts(100);
    CHECK(q_pochhammer(1, 1, true, 100).counts() == p);
}

TEST_CASE("arithmetic and truncation") {
    const TruncatedSeries a = TruncatedSeries::from_counts({1, 2, 3, 4});
    const TruncatedSeries b = TruncatedSeries::from_counts({1, 1});
    CHECK((a + b).order() == 1);
    CHECK((a * b).counts() == std::vector<Count>{1, 3});
    CHECK((a - a).counts() == std::vector<Count>{0, 0, 0, 0});
    CHECK(a.scaled(-2).counts() == std::vector<Count>{-2, -4, -6, -8});
    CHECK(a.truncated(2).counts() == std::vector<Count>{1, 2, 3});
    CHECK(a.with_negated_q().counts() == std::vector<Count>{1, -2, 3, -4});
    CHECK(TruncatedSeries::from_counts({2, 4, -6}).halved().counts() == std::vector<Count>{1, 2, -3});
    CHECK_THROWS_AS((void)a.halved(), std::domain_error);
    CHECK_THROWS_AS((void)TruncatedSeries::from_counts({2, 1}).inverse(), std::domain_error);
    CHECK_THROWS_AS((void)a.coefficient(4), std::out_of_range);
    CHECK(TruncatedSeries::monomial(5, {1, 2}, 3, 4).coefficient(3, 1, 2) == 5);
    CHECK(TruncatedSeries::monomial(5, {1, 2}, 9, 4) == TruncatedSeries(4));

    const Count big = Count{1} << 62;
    const TruncatedSeries huge = TruncatedSeries::from_counts({1, big});
    CHECK_THROWS_AS((void)(huge * huge.scaled(4)), std::overflow_error);
}

TEST_CASE("binomial factors") {
    TruncatedSeries s = TruncatedSeries::one(10);
    s.multiply_by_binomial(-1, {1, 0}, 3);
    CHECK(s.coefficient(3, 1, 0) == -1);
    s.divide_by_binomial(-1, {1, 0}, 3);
    CHECK(s == TruncatedSeries::one(10));
    TruncatedSeries t = TruncatedSeries::one(4);
    t.multiply_by_binomial(2, {0, 1}, 0);
    CHECK(t.coefficient(0, 0, 1) == 2);
    CHECK_THROWS_AS(t.divide_by_binomial(2, {}, 0), std::domain_error);
}

TEST_CASE("multiplication matches direct convolution") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Count> a(40);
        std::vector<Count> b(40);
        for (auto& v : a) v = coeff(rng);
        for (auto& v : b) v = coeff(rng);
        CHECK((TruncatedSeries::from_counts(a) * TruncatedSeries::from_counts(b)).counts() == convolve(a, b));
    }
}

TEST_CASE("ring laws on random sparse series") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_series(rng, 50, false);
        const auto b = random_series(rng, 50, false);
        const auto c = random_series(rng, 50, false);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        // Inverse coefficients grow geometrically; keep them inside 64 bits.
        const auto u = random_series(rng, 20, true);
        REQUIRE(u * u.inverse() == TruncatedSeries::one(20));
        REQUIRE(u.swapped_markers().swapped_markers() == u);
        REQUIRE((u * a).specialized() == u.specialized() * a.specialized());
    }
}

TEST_CASE("factor-by-factor inversion equals the general inverse") {
    const auto product = pochhammer({1, 1, 1, 2}, 3, std::nullopt, false, 30);
    const auto inverse = pochhammer({1, 1, 1, 2}, 3, std::nullopt, true, 30);
    CHECK(product.inverse() == inverse);
    CHECK(product * inverse == TruncatedSeries::one(30));
    CHECK(first_difference(product, inverse) == std::optional<std::size_t>{2});
    CHECK_FALSE(first_difference(product, product));
}
