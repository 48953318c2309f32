#pragma once

#include "copa/checked_int.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace copa {

/// x^x y^y. In copartition generating functions x marks sky parts and y
/// marks ground parts.
struct Monomial {
    unsigned x = 0;
    unsigned y = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact bivariate polynomial in x and y, stored sparsely without zero terms.
class Polynomial {
public:
    using Terms = std::map<Monomial, Count>;

    Polynomial() = default;
    explicit Polynomial(Count constant);
    static Polynomial monomial(Count coefficient, Monomial mono);

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] Count coefficient(Monomial mono) const;
    /// Value at x = y = 1.
    [[nodiscard]] Count at_one() const;

    void add_term(Monomial mono, Count coefficient);
    /// *this += factor * mono * p
    void add_scaled(const Polynomial& p, Count factor, Monomial mono = {});
    /// *this += lhs * rhs
    void add_product(const Polynomial& lhs, const Polynomial& rhs);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    [[nodiscard]] Polynomial scaled(Count factor) const;
    [[nodiscard]] Polynomial swapped() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

/// Formal power series in q truncated after q^order, with polynomial
/// coefficients in the x, y markers. Everything is exact modulo q^(order+1);
/// binary operations produce the smaller of the two orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(Count coefficient, Monomial mono, std::size_t q_exponent, std::size_t order);
    /// Univariate series with the given q coefficients; order = size - 1
    /// unless given explicitly (missing coefficients are zero).
    static TruncatedSeries from_counts(const std::vector<Count>& counts, std::optional<std::size_t> order = {});

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] const Polynomial& coefficient(std::size_t n) const;
    /// Coefficient of q^n at x = y = 1.
    [[nodiscard]] Count count(std::size_t n) const { return coefficient(n).at_one(); }
    /// Coefficient of x^s y^w q^n.
    [[nodiscard]] Count coefficient(std::size_t n, unsigned s, unsigned w) const;
    /// Coefficients at x = y = 1 for q^0..q^order.
    [[nodiscard]] std::vector<Count> counts() const;
    [[nodiscard]] bool univariate() const;

    void set_coefficient(std::size_t n, Polynomial p);
    void add_to_coefficient(std::size_t n, const Polynomial& p);

    [[nodiscard]] TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    [[nodiscard]] TruncatedSeries scaled(Count factor) const;

    /// Multiplies in place by (1 + c * mono * q^k).
    void multiply_by_binomial(Count c, Monomial mono, std::size_t k);
    /// Divides in place by (1 + c * mono * q^k), k >= 1, by the geometric
    /// recurrence out[n] = in[n] - c * mono * out[n - k].
    void divide_by_binomial(Count c, Monomial mono, std::size_t k);

    /// Multiplicative inverse. Throws std::domain_error unless the q^0
    /// coefficient is exactly 1.
    [[nodiscard]] TruncatedSeries inverse() const;

    /// x = y = 1.
    [[nodiscard]] TruncatedSeries specialized() const;
    /// q -> -q: flips the sign of odd-exponent coefficients.
    [[nodiscard]] TruncatedSeries with_negated_q() const;
    /// x <-> y.
    [[nodiscard]] TruncatedSeries swapped_markers() const;
    /// Exact division by 2. Throws std::domain_error on an odd coefficient.
    [[nodiscard]] TruncatedSeries halved() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

/// First exponent (up to the smaller order) at which the series differ.
[[nodiscard]] std::optional<std::size_t> first_difference(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// The base of a q-Pochhammer symbol: sign * x^x_deg * y^y_deg * q^q_offset.
struct PochhammerBase {
    int sign = 1;
    unsigned x_deg = 0;
    unsigned y_deg = 0;
    std::size_t q_offset = 0;
};

/// (base; q^step)_length, or the infinite product when `length` is empty,
/// raised to -1 when `invert` is set; truncated at `order`. Inverse factors
/// are applied one at a time with `divide_by_binomial`.
[[nodiscard]] TruncatedSeries pochhammer(const PochhammerBase& base, std::size_t step,
                                         std::optional<std::size_t> length, bool invert, std::size_t order);

/// Shorthand for (q^offset; q^step)_inf^(+-1).
[[nodiscard]] TruncatedSeries q_pochhammer(std::size_t offset, std::size_t step, bool invert, std::size_t order);

} // namespace copa
