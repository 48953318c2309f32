#pragma once

#include "copa/copartition.hpp"
#include "copa/report.hpp"
#include "copa/series.hpp"

#include <cstddef>

namespace copa {

/// Whether x (sky count) and y (ground count) markers are kept or set to 1.
enum class Markers { Keep, Specialized };

/// (xy q^(a+b); q^m)_inf / ((x q^b; q^m)_inf (y q^a; q^m)_inf).
/// Requires a, b >= 1.
[[nodiscard]] TruncatedSeries gf_product(const CopartitionParams& params, std::size_t order,
                                         Markers markers = Markers::Keep);

/// sum over w, s of x^s y^w q^(msw + aw + bs) / ((q^m;q^m)_w (q^m;q^m)_s).
/// For a = 0 the sum starts at s = 1 and for b = 0 at w = 1, which is the
/// generating function of the degenerate regimes as well.
[[nodiscard]] TruncatedSeries gf_double_sum(const CopartitionParams& params, std::size_t order,
                                            Markers markers = Markers::Keep);

/// The two intermediate forms of the analytic proof, after summing the sky
/// and after the first q-binomial step respectively:
///   sum_w y^w q^(aw) / ((q^m;q^m)_w (x q^(mw+b); q^m)_inf)
///   1/(x q^b; q^m)_inf * sum_w y^w q^(aw) (x q^b; q^m)_w / (q^m;q^m)_w
/// Both require a, b >= 1.
[[nodiscard]] TruncatedSeries gf_sky_summed(const CopartitionParams& params, std::size_t order);
[[nodiscard]] TruncatedSeries gf_binomial_step(const CopartitionParams& params, std::size_t order);

enum class RogersRamanujan { G, H };
enum class SeriesForm { Sum, Product };

/// G = sum q^(n^2)/(q;q)_n = 1/((q;q^5)(q^4;q^5)),
/// H = sum q^(n^2+n)/(q;q)_n = 1/((q^2;q^5)(q^3;q^5)).
[[nodiscard]] TruncatedSeries rr_function(RogersRamanujan which, SeriesForm form, std::size_t order);

/// G = 1/(q^5;q^5) * sum cp_{1,4,5}(n) q^n and H likewise with cp_{2,3,5},
/// with the cp coefficients taken from the product series and, for
/// n <= enumeration_limit, from enumeration.
[[nodiscard]] VerificationReport rr_copartition_check(RogersRamanujan which, std::size_t order,
                                                      int enumeration_limit = 30);

/// f(-q^x, -q^y) as the bilateral sum sum_n (-1)^n q^(x n(n+1)/2 + y n(n-1)/2).
[[nodiscard]] TruncatedSeries theta_f(std::size_t x_exp, std::size_t y_exp, std::size_t order);

/// (q^x; q^(x+y))_inf (q^y; q^(x+y))_inf (q^(x+y); q^(x+y))_inf.
[[nodiscard]] TruncatedSeries theta_product(std::size_t x_exp, std::size_t y_exp, std::size_t order);

/// (q^m;q^m)_inf^2 / f(-q^a, -q^(m-a)) against gf_product(a, m-a, m) at x = y = 1.
[[nodiscard]] VerificationReport eta_theta_quotient_check(int a, int m, std::size_t order);

/// nu(q) = sum q^(n^2+n) / (-q; q^2)_(n+1).
[[nodiscard]] TruncatedSeries mock_theta_nu(std::size_t order);

/// (nu(q) + nu(-q)) / 2, halved exactly.
[[nodiscard]] TruncatedSeries eo_star_gf(std::size_t order);

/// For (0,b,m) with b >= 1: enumeration (n <= enumeration_limit), the double
/// sum, the Lambert form 1/(q^m;q^m) * sum_{s>=1} q^(bs)/(1-q^(ms)) and,
/// when b <= m, the divisor convolution all agree to `order`.
[[nodiscard]] VerificationReport gf_degenerate_check(const CopartitionParams& params, std::size_t order,
                                                     int enumeration_limit = 40);

} // namespace copa
