#include "copa/generating_functions.hpp"

#include "copa/enumeration.hpp"
#include "copa/partition_functions.hpp"

#include <stdexcept>
#include <string>

namespace copa {

namespace {

std::size_t to_size(int v) { return static_cast<std::size_t>(v); }

void require_standard(const CopartitionParams& params, const char* what) {
    params.validate();
    if (!params.standard()) {
        throw std::invalid_argument(std::string(what) + " needs a, b >= 1, got " + params.to_string());
    }
}

Monomial marker(Markers markers, unsigned x, unsigned y) {
    return markers == Markers::Keep ? Monomial{x, y} : Monomial{};
}

// target += mono * q^shift * source
void add_shifted(TruncatedSeries& target, const TruncatedSeries& source, Monomial mono, std::size_t shift) {
    for (std::size_t n = 0; n + shift <= target.order() && n <= source.order(); ++n) {
        const Polynomial& p = source.coefficient(n);
        if (p.is_zero()) continue;
        Polynomial moved;
        moved.add_scaled(p, 1, mono);
        target.add_to_coefficient(n + shift, moved);
    }
}

// 1/(q^m;q^m)_k for k = 0..max_k, as univariate coefficient vectors.
std::vector<std::vector<Count>> inverse_finite_products(std::size_t m, std::size_t max_k, std::size_t order) {
    std::vector<std::vector<Count>> out;
    out.reserve(max_k + 1);
    TruncatedSeries current = TruncatedSeries::one(order);
    out.push_back(current.counts());
    for (std::size_t k = 1; k <= max_k; ++k) {
        current.divide_by_binomial(-1, {}, m * k);
        out.push_back(current.counts());
    }
    return out;
}

} // namespace

TruncatedSeries gf_product(const CopartitionParams& params, std::size_t order, Markers markers) {
    require_standard(params, "gf_product");
    const auto [a, b, m] = params;
    TruncatedSeries out = TruncatedSeries::one(order);
    for (std::size_t k = to_size(a + b); k <= order; k += to_size(m)) out.multiply_by_binomial(-1, marker(markers, 1, 1), k);
    for (std::size_t k = to_size(b); k <= order; k += to_size(m)) out.divide_by_binomial(-1, marker(markers, 1, 0), k);
    for (std::size_t k = to_size(a); k <= order; k += to_size(m)) out.divide_by_binomial(-1, marker(markers, 0, 1), k);
    return out;
}

TruncatedSeries gf_double_sum(const CopartitionParams& params, std::size_t order, Markers markers) {
    params.validate();
    const auto [a, b, m] = params;
    const std::size_t um = to_size(m);
    const std::size_t w_min = b == 0 ? 1 : 0;
    const std::size_t s_min = a == 0 ? 1 : 0;
    auto exponent = [&](std::size_t w, std::size_t s) { return um * w * s + to_size(a) * w + to_size(b) * s; };

    // Largest part counts that can appear: every ground part costs at least
    // a, or m when a = 0 (the sky is then nonempty and each ground part adds
    // a rectangle column); likewise for the sky.
    const std::size_t max_w = order / to_size(a >= 1 ? a : m);
    const std::size_t max_s = order / to_size(b >= 1 ? b : m);
    const auto inv = inverse_finite_products(um, std::max(max_w, max_s), order);

    TruncatedSeries out(order);
    for (std::size_t w = w_min; w <= max_w; ++w) {
        if (exponent(w, s_min) > order) break;
        for (std::size_t s = s_min; s <= max_s; ++s) {
            const std::size_t e = exponent(w, s);
            if (e > order) break;
            const Monomial mono = marker(markers, static_cast<unsigned>(s), static_cast<unsigned>(w));
            const auto& lhs = inv[w];
            const auto& rhs = inv[s];
            for (std::size_t i = 0; e + i <= order; ++i) {
                if (lhs[i] == 0) continue;
                for (std::size_t j = 0; e + i + j <= order; ++j) {
                    if (rhs[j] == 0) continue;
                    out.add_to_coefficient(e + i + j, Polynomial::monomial(checked_mul(lhs[i], rhs[j]), mono));
                }
            }
        }
    }
    return out;
}

TruncatedSeries gf_sky_summed(const CopartitionParams& params, std::size_t order) {
    require_standard(params, "gf_sky_summed");
    const auto [a, b, m] = params;
    TruncatedSeries out(order);
    for (std::size_t w = 0; to_size(a) * w <= order; ++w) {
        TruncatedSeries term = pochhammer({1, 0, 0, to_size(m)}, to_size(m), w, true, order);
        term = term * pochhammer({1, 1, 0, to_size(m) * w + to_size(b)}, to_size(m), std::nullopt, true, order);
        add_shifted(out, term, {0, static_cast<unsigned>(w)}, to_size(a) * w);
    }
    return out;
}

TruncatedSeries gf_binomial_step(const CopartitionParams& params, std::size_t order) {
    require_standard(params, "gf_binomial_step");
    const auto [a, b, m] = params;
    TruncatedSeries sum(order);
    for (std::size_t w = 0; to_size(a) * w <= order; ++w) {
        TruncatedSeries term = pochhammer({1, 1, 0, to_size(b)}, to_size(m), w, false, order);
        for (std::size_t t = 1; t <= w; ++t) term.divide_by_binomial(-1, {}, to_size(m) * t);
        add_shifted(sum, term, {0, static_cast<unsigned>(w)}, to_size(a) * w);
    }
    return sum * pochhammer({1, 1, 0, to_size(b)}, to_size(m), std::nullopt, true, order);
}

TruncatedSeries rr_function(RogersRamanujan which, SeriesForm form, std::size_t order) {
    const std::size_t shift = which == RogersRamanujan::G ? 0 : 1;
    if (form == SeriesForm::Product) {
        TruncatedSeries out = q_pochhammer(1 + shift, 5, true, order);
        return out * q_pochhammer(4 - shift, 5, true, order);
    }
    TruncatedSeries out(order);
    TruncatedSeries denominator = TruncatedSeries::one(order);  // 1/(q;q)_n
    for (std::size_t n = 0; n * n + shift * n <= order; ++n) {
        if (n > 0) denominator.divide_by_binomial(-1, {}, n);
        add_shifted(out, denominator, {}, n * n + shift * n);
    }
    return out;
}

VerificationReport rr_copartition_check(RogersRamanujan which, std::size_t order, int enumeration_limit) {
    const bool g = which == RogersRamanujan::G;
    return timed_report(g ? "rr-G" : "rr-H", [&](VerificationReport& report) {
        const CopartitionParams params = g ? CopartitionParams{1, 4, 5} : CopartitionParams{2, 3, 5};
        report.add_range("order", 0, static_cast<long>(order));
        const TruncatedSeries sum = rr_function(which, SeriesForm::Sum, order);
        const TruncatedSeries product = rr_function(which, SeriesForm::Product, order);
        const TruncatedSeries cp = gf_product(params, order, Markers::Specialized);
        const TruncatedSeries via_cp = cp * q_pochhammer(5, 5, true, order);
        for (std::size_t n = 0; n <= order; ++n) {
            const auto label = [&] { return std::string(g ? "G" : "H") + " sum vs product at q^" + std::to_string(n); };
            report.expect_equal(product.count(n), sum.count(n), label);
            report.expect_equal(sum.count(n), via_cp.count(n), [&] {
                return "series vs 1/(q^5;q^5) * cp" + params.to_string() + " at q^" + std::to_string(n);
            });
        }
        const int limit = std::min(enumeration_limit, static_cast<int>(order));
        report.add_range("enumeration_n", 0, limit);
        for (int n = 0; n <= limit; ++n) {
            report.expect_equal(cp.count(to_size(n)), count_copartitions(params, n, CountMethod::Enumeration), [&] {
                return "cp" + params.to_string() + "(" + std::to_string(n) + ") product vs enumeration";
            });
        }
    });
}

TruncatedSeries theta_product(std::size_t x_exp, std::size_t y_exp, std::size_t order) {
    const std::size_t step = x_exp + y_exp;
    if (step == 0) throw std::invalid_argument("theta_f needs x_exp + y_exp >= 1");
    TruncatedSeries out = q_pochhammer(x_exp, step, false, order);
    out = out * q_pochhammer(y_exp, step, false, order);
    return out * q_pochhammer(step, step, false, order);
}

TruncatedSeries theta_f(std::size_t x_exp, std::size_t y_exp, std::size_t order) {
    if (x_exp + y_exp == 0) throw std::invalid_argument("theta_f needs x_exp + y_exp >= 1");
    TruncatedSeries out(order);
    // n >= 0 and n = -k for k >= 1; both exponent sequences are non-decreasing.
    const auto exponent = [&](std::size_t up, std::size_t down, std::size_t k) {
        return up * (k * (k + 1) / 2) + down * (k * (k - 1) / 2);
    };
    for (std::size_t n = 0; exponent(x_exp, y_exp, n) <= order; ++n) {
        out.add_to_coefficient(exponent(x_exp, y_exp, n), Polynomial(n % 2 == 0 ? 1 : -1));
    }
    for (std::size_t k = 1; exponent(y_exp, x_exp, k) <= order; ++k) {
        out.add_to_coefficient(exponent(y_exp, x_exp, k), Polynomial(k % 2 == 0 ? 1 : -1));
    }
    return out;
}

VerificationReport eta_theta_quotient_check(int a, int m, std::size_t order) {
    return timed_report("theta-eta(" + std::to_string(a) + "," + std::to_string(m) + ")", [&](VerificationReport& report) {
        if (a < 1 || a >= m) throw std::invalid_argument("eta/theta quotient needs 1 <= a < m");
        report.add_range("order", 0, static_cast<long>(order));
        const TruncatedSeries eta = q_pochhammer(to_size(m), to_size(m), false, order);
        const TruncatedSeries lhs = eta * eta * theta_f(to_size(a), to_size(m - a), order).inverse();
        const TruncatedSeries rhs = gf_product({a, m - a, m}, order, Markers::Specialized);
        for (std::size_t n = 0; n <= order; ++n) {
            report.expect_equal(rhs.count(n), lhs.count(n), [&] { return "coefficient of q^" + std::to_string(n); });
        }
    });
}

TruncatedSeries mock_theta_nu(std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t n = 0; n * n + n <= order; ++n) {
        const TruncatedSeries term = pochhammer({-1, 0, 0, 1}, 2, n + 1, true, order);
        add_shifted(out, term, {}, n * n + n);
    }
    return out;
}

TruncatedSeries eo_star_gf(std::size_t order) {
    const TruncatedSeries nu = mock_theta_nu(order);
    return (nu + nu.with_negated_q()).halved();
}

VerificationReport gf_degenerate_check(const CopartitionParams& params, std::size_t order, int enumeration_limit) {
    return timed_report("degenerate" + params.to_string(), [&](VerificationReport& report) {
        params.validate();
        if (params.a != 0 || params.b < 1) throw std::invalid_argument("gf_degenerate_check needs a = 0 and b >= 1");
        const int b = params.b;
        const int m = params.m;
        report.add_range("order", 0, static_cast<long>(order));

        // Lambert form: the coefficient of q^k in sum_{s>=1} q^(bs)/(1-q^(ms))
        // counts divisors of k that are >= b and congruent to b mod m.
        TruncatedSeries lambert(order);
        for (std::size_t s = 1; to_size(b) * s <= order; ++s) {
            for (std::size_t k = to_size(b) * s; k <= order; k += to_size(m) * s) lambert.add_to_coefficient(k, Polynomial(1));
        }
        const TruncatedSeries via_lambert = lambert * q_pochhammer(to_size(m), to_size(m), true, order);
        const TruncatedSeries double_sum = gf_double_sum(params, order, Markers::Specialized);
        const bool formula = has_closed_form(params);

        for (std::size_t n = 0; n <= order; ++n) {
            const auto at = [&](const char* what) {
                return [&, what] { return std::string(what) + " at n=" + std::to_string(n); };
            };
            report.expect_equal(via_lambert.count(n), double_sum.count(n), at("Lambert form vs double sum"));
            if (formula) {
                report.expect_equal(via_lambert.count(n), count_formula(params, static_cast<int>(n)),
                                    at("Lambert form vs divisor convolution"));
            }
        }
        const int limit = std::min(enumeration_limit, static_cast<int>(order));
        report.add_range("enumeration_n", 0, limit);
        for (int n = 0; n <= limit; ++n) {
            report.expect_equal(via_lambert.count(to_size(n)), count_copartitions(params, n, CountMethod::Enumeration),
                                [&] { return "Lambert form vs enumeration at n=" + std::to_string(n); });
        }
    });
}

} // namespace copa
