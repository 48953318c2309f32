#include "copa/series.hpp"

#include <algorithm>

namespace copa {

Polynomial::Polynomial(Count constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::monomial(Count coefficient, Monomial mono) {
    Polynomial p;
    p.add_term(mono, coefficient);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Count Polynomial::coefficient(Monomial mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
}

Count Polynomial::at_one() const {
    Count total = 0;
    for (const auto& [mono, c] : terms_) total = checked_add(total, c);
    return total;
}

void Polynomial::add_term(Monomial mono, Count coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coefficient);
    if (!inserted) {
        it->second = checked_add(it->second, coefficient);
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::add_scaled(const Polynomial& p, Count factor, Monomial mono) {
    if (factor == 0) return;
    if (&p == this) {
        Polynomial copy = p;
        add_scaled(copy, factor, mono);
        return;
    }
    for (const auto& [m, c] : p.terms_) {
        add_term({m.x + mono.x, m.y + mono.y}, checked_mul(c, factor));
    }
}

void Polynomial::add_product(const Polynomial& lhs, const Polynomial& rhs) {
    if (&lhs == this || &rhs == this) {
        Polynomial l = lhs;
        Polynomial r = rhs;
        add_product(l, r);
        return;
    }
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            add_term({ml.x + mr.x, ml.y + mr.y}, checked_mul(cl, cr));
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    add_scaled(rhs, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    add_scaled(rhs, -1);
    return *this;
}

Polynomial Polynomial::scaled(Count factor) const {
    Polynomial out;
    out.add_scaled(*this, factor);
    return out;
}

Polynomial Polynomial::swapped() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.add_term({m.y, m.x}, c);
    return out;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Polynomial(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(Count coefficient, Monomial mono, std::size_t q_exponent,
                                          std::size_t order) {
    TruncatedSeries s(order);
    if (q_exponent <= order) s.coeffs_[q_exponent] = Polynomial::monomial(coefficient, mono);
    return s;
}

TruncatedSeries TruncatedSeries::from_counts(const std::vector<Count>& counts, std::optional<std::size_t> order) {
    if (counts.empty() && !order) throw std::invalid_argument("from_counts needs coefficients or an order");
    TruncatedSeries s(order.value_or(counts.size() - 1));
    for (std::size_t n = 0; n < counts.size() && n <= s.order(); ++n) s.coeffs_[n] = Polynomial(counts[n]);
    return s;
}

const Polynomial& TruncatedSeries::coefficient(std::size_t n) const {
    if (n > order()) throw std::out_of_range("coefficient beyond the truncation order");
    return coeffs_[n];
}

Count TruncatedSeries::coefficient(std::size_t n, unsigned s, unsigned w) const {
    return coefficient(n).coefficient({s, w});
}

std::vector<Count> TruncatedSeries::counts() const {
    std::vector<Count> out;
    out.reserve(coeffs_.size());
    for (const auto& p : coeffs_) out.push_back(p.at_one());
    return out;
}

bool TruncatedSeries::univariate() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_constant(); });
}

void TruncatedSeries::set_coefficient(std::size_t n, Polynomial p) {
    if (n > order()) return;
    coeffs_[n] = std::move(p);
}

void TruncatedSeries::add_to_coefficient(std::size_t n, const Polynomial& p) {
    if (n > order()) return;
    coeffs_[n] += p;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    TruncatedSeries out(std::min(new_order, order()));
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    TruncatedSeries out(std::min(lhs.order(), rhs.order()));
    const std::size_t order = out.order();
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j].add_product(lhs.coeffs_[i], rhs.coeffs_[j]);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(Count factor) const {
    TruncatedSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n].scaled(factor);
    return out;
}

void TruncatedSeries::multiply_by_binomial(Count c, Monomial mono, std::size_t k) {
    if (c == 0) return;
    if (k == 0) {
        for (auto& p : coeffs_) {
            Polynomial copy = p;
            p.add_scaled(copy, c, mono);
        }
        return;
    }
    for (std::size_t n = order(); n >= k; --n) {
        coeffs_[n].add_scaled(coeffs_[n - k], c, mono);
        if (n == k) break;
    }
}

void TruncatedSeries::divide_by_binomial(Count c, Monomial mono, std::size_t k) {
    if (c == 0) return;
    if (k == 0) throw std::domain_error("cannot invert a factor whose constant term is not 1");
    for (std::size_t n = k; n <= order(); ++n) {
        coeffs_[n].add_scaled(coeffs_[n - k], checked_sub(0, c), mono);
    }
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (!(coeffs_[0] == Polynomial(1))) {
        throw std::domain_error("cannot invert a series whose constant term is not 1");
    }
    TruncatedSeries out(order());
    out.coeffs_[0] = Polynomial(1);
    for (std::size_t n = 1; n <= order(); ++n) {
        Polynomial acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (coeffs_[i].is_zero()) continue;
            acc.add_product(coeffs_[i], out.coeffs_[n - i]);
        }
        out.coeffs_[n] = acc.scaled(-1);
    }
    return out;
}

TruncatedSeries TruncatedSeries::specialized() const {
    TruncatedSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = Polynomial(coeffs_[n].at_one());
    return out;
}

TruncatedSeries TruncatedSeries::with_negated_q() const {
    TruncatedSeries out = *this;
    for (std::size_t n = 1; n <= order(); n += 2) out.coeffs_[n] = out.coeffs_[n].scaled(-1);
    return out;
}

TruncatedSeries TruncatedSeries::swapped_markers() const {
    TruncatedSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n].swapped();
    return out;
}

TruncatedSeries TruncatedSeries::halved() const {
    TruncatedSeries out(order());
    for (std::size_t n = 0; n <= order(); ++n) {
        for (const auto& [mono, c] : coeffs_[n].terms()) {
            if (c % 2 != 0) throw std::domain_error("halving a series with an odd coefficient");
            out.coeffs_[n].add_term(mono, c / 2);
        }
    }
    return out;
}

std::optional<std::size_t> first_difference(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const std::size_t order = std::min(lhs.order(), rhs.order());
    for (std::size_t n = 0; n <= order; ++n) {
        if (!(lhs.coefficient(n) == rhs.coefficient(n))) return n;
    }
    return std::nullopt;
}

TruncatedSeries pochhammer(const PochhammerBase& base, std::size_t step, std::optional<std::size_t> length,
                           bool invert, std::size_t order) {
    if (step == 0) throw std::invalid_argument("pochhammer step must be positive");
    if (base.sign != 1 && base.sign != -1) throw std::invalid_argument("pochhammer sign must be +1 or -1");
    TruncatedSeries out = TruncatedSeries::one(order);
    const Monomial mono{base.x_deg, base.y_deg};
    const Count c = -base.sign;  // factor 1 - base * q^(step t)
    for (std::size_t t = 0; !length || t < *length; ++t) {
        const std::size_t k = base.q_offset + step * t;
        if (k > order) break;
        if (invert) {
            out.divide_by_binomial(c, mono, k);
        } else {
            out.multiply_by_binomial(c, mono, k);
        }
    }
    return out;
}

TruncatedSeries q_pochhammer(std::size_t offset, std::size_t step, bool invert, std::size_t order) {
    return pochhammer({1, 0, 0, offset}, step, std::nullopt, invert, order);
}

} // namespace copa
