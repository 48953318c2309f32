#include "copa/suites.hpp"

#include "copa/bijections.hpp"
#include "copa/enumeration.hpp"
#include "copa/generating_functions.hpp"
#include "copa/partition_functions.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace copa {

namespace {

std::string refined_text(const RefinedCount& r) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [key, value] : r.table) {
        if (!first) out << ',';
        first = false;
        out << "(w=" << key.first << ",s=" << key.second << "):" << value;
    }
    out << '}';
    return out.str();
}

RefinedCount enumerated_refined(const CopartitionParams& params, int n) {
    RefinedCount out;
    for_each_copartition(params, n, [&](const Copartition& c) { ++out.table[{c.ground_parts(), c.sky_parts()}]; });
    return out;
}

RefinedCount refined_from_series(const TruncatedSeries& series, std::size_t n) {
    RefinedCount out;
    for (const auto& [mono, c] : series.coefficient(n).terms()) out.table[{mono.y, mono.x}] = c;
    return out;
}

bool check_refined(VerificationReport& report, const RefinedCount& expected, const RefinedCount& actual,
                   const std::function<std::string()>& label) {
    return report.check(expected == actual,
                        [&] { return Counterexample{label(), refined_text(expected), refined_text(actual)}; });
}

std::string at(const CopartitionParams& p, long n) { return "cp" + p.to_string() + "(" + std::to_string(n) + ")"; }

std::vector<CopartitionParams> cube(int lo, int hi) {
    std::vector<CopartitionParams> out;
    for (int a = lo; a <= hi; ++a) {
        for (int b = lo; b <= hi; ++b) {
            for (int m = std::max(lo, 1); m <= hi; ++m) out.push_back({a, b, m});
        }
    }
    return out;
}

std::vector<Partition> partitions_in_class(int n, int residue, int m) {
    RestrictedPartitionSpec spec;
    spec.residue = residue;
    spec.modulus = m;
    spec.min_part = residue;
    return enumerate_restricted(n, spec);
}

VerificationReport gf_triple_suite(const SuiteOptions& options) {
    return timed_report("gf-triple", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        const int refined_n = std::min(max_n, 25);
        const auto order = static_cast<std::size_t>(max_n);
        report.add_range("a,b,m", "1..4");
        report.add_range("n", 0, max_n);
        report.add_range("refined_n", 0, refined_n);
        for (const auto& params : cube(1, 4)) {
            const TruncatedSeries product = gf_product(params, order);
            const TruncatedSeries double_sum = gf_double_sum(params, order);
            const auto series_label = [&](const char* what) {
                return [&, what] { return std::string(what) + " for " + params.to_string(); };
            };
            const auto diff = first_difference(product, double_sum);
            report.check(!diff, [&] {
                return Counterexample{series_label("product vs double sum")() + " at q^" + std::to_string(*diff),
                                      "equal", "differ"};
            });
            for (const auto& [name, other] :
                 {std::pair{"sky-summed form", gf_sky_summed(params, order)},
                  std::pair{"q-binomial step form", gf_binomial_step(params, order)}}) {
                const auto d = first_difference(product, other);
                report.check(!d, [&] {
                    return Counterexample{std::string(name) + " for " + params.to_string() + " at q^" +
                                              std::to_string(*d),
                                          "equal to product", "differs"};
                });
            }
            const auto swapped = first_difference(product.swapped_markers(), gf_product({params.b, params.a, params.m}, order));
            report.check(!swapped, [&] { return Counterexample{series_label("x<->y swap symmetry")(), "equal", "differ"}; });

            for (int n = 0; n <= max_n; ++n) {
                const auto un = static_cast<std::size_t>(n);
                const RefinedCount enumerated = enumerated_refined(params, n);
                const auto label = [&] { return at(params, n); };
                report.expect_equal(enumerated.total(), product.count(un), [&] { return label() + " enumeration vs product"; });
                report.expect_equal(enumerated.total(), double_sum.count(un), [&] { return label() + " enumeration vs double sum"; });
                bool nonnegative = true;
                for (const auto& [mono, c] : product.coefficient(un).terms()) nonnegative = nonnegative && c >= 0;
                report.check(nonnegative, [&] { return Counterexample{label() + " coefficient sign", ">= 0", "negative"}; });
                if (n <= refined_n) {
                    check_refined(report, enumerated, refined_from_series(product, un), [&] { return label() + " refined, product"; });
                    check_refined(report, enumerated, refined_from_series(double_sum, un), [&] { return label() + " refined, double sum"; });
                    check_refined(report, enumerated, count_refined(params, n), [&] { return label() + " refined, block counts"; });
                }
            }
        }
    });
}

VerificationReport phi_suite(const SuiteOptions& options) {
    return timed_report("phi", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(22);
        const int cardinality_n = std::max(max_n, 25);
        report.add_range("total_size", 0, max_n);
        report.add_range("cardinality_n", 0, cardinality_n);
        report.add_range("a,b,m", "(1,2,4),(1,1,2),(2,3,5)");

        // The worked example and its inverse table.
        {
            const CopartitionParams params{1, 2, 4};
            const PhiResult r = phi(params, {9, 5, 5, 5, 5, 1, 1, 1}, {26, 26, 26, 22, 6, 6, 2});
            const Copartition expected = make_copartition(params, {9, 5, 5, 5, 1}, {6, 6, 6, 2});
            report.check(r.mu == Partition{11, 7, 3} && r.copartition == expected && r.threshold == 5, [&] {
                return Counterexample{"worked phi example", "[11,7,3] " + expected.to_string(),
                                      r.mu.to_string() + " " + r.copartition.to_string()};
            });
            const PhiInverseResult inv = phi_inverse({11, 7, 3}, expected);
            const std::vector<PhiInverseStep> table{{3, 0}, {7, 1}, {11, 1}};
            report.check(inv.steps == table && inv.pi == Partition{9, 5, 5, 5, 5, 1, 1, 1} &&
                             inv.lambda == Partition{26, 26, 26, 22, 6, 6, 2},
                         [&] {
                             return Counterexample{"worked phi inverse example", "(3,0),(7,1),(11,1)",
                                                   inv.pi.to_string() + " " + inv.lambda.to_string()};
                         });
        }

        for (const CopartitionParams params : {CopartitionParams{1, 2, 4}, CopartitionParams{1, 1, 2}, CopartitionParams{2, 3, 5}}) {
            const auto [a, b, m] = params;
            std::vector<std::vector<Partition>> pis;
            std::vector<std::vector<Partition>> lambdas;
            for (int t = 0; t <= max_n; ++t) {
                pis.push_back(partitions_in_class(t, a, m));
                lambdas.push_back(partitions_in_class(t, b, m));
            }
            for (int total = 0; total <= max_n; ++total) {
                std::set<std::pair<Partition, Copartition>> images;
                std::size_t inputs = 0;
                for (int t = 0; t <= total; ++t) {
                    for (const auto& pi : pis[static_cast<std::size_t>(t)]) {
                        for (const auto& lambda : lambdas[static_cast<std::size_t>(total - t)]) {
                            ++inputs;
                            const auto label = [&] { return "phi" + params.to_string() + " on " + pi.to_string() + "," + lambda.to_string(); };
                            PhiResult r;
                            try {
                                r = phi(params, pi, lambda);
                            } catch (const std::exception& e) {
                                report.check(false, [&] { return Counterexample{label(), "a valid image", e.what()}; });
                                continue;
                            }
                            report.expect_equal(total, r.mu.size() + r.copartition.size(), [&] { return label() + " size"; });
                            bool mu_ok = true;
                            for (Part part : r.mu.parts()) mu_ok = mu_ok && part >= a + b && (part - a - b) % m == 0;
                            report.check(mu_ok, [&] { return Counterexample{label() + " mu class", "P_{a+b,m}", r.mu.to_string()}; });
                            const PhiInverseResult inv = phi_inverse(r.mu, r.copartition);
                            report.check(inv.pi == pi && inv.lambda == lambda, [&] {
                                return Counterexample{label() + " round trip", pi.to_string() + "," + lambda.to_string(),
                                                      inv.pi.to_string() + "," + inv.lambda.to_string()};
                            });
                            images.emplace(r.mu, r.copartition);
                        }
                    }
                }
                report.expect_equal(static_cast<Count>(inputs), static_cast<Count>(images.size()),
                                    [&] { return "phi" + params.to_string() + " injectivity at size " + std::to_string(total); });
            }

            // sum_j #P_{a+b,m}(j) cp(n-j) = #(P_{a,m} x P_{b,m})(n), from series counts.
            const auto order = static_cast<std::size_t>(cardinality_n);
            const auto cp = gf_product(params, order, Markers::Specialized);
            const auto mu_count = q_pochhammer(static_cast<std::size_t>(a + b), static_cast<std::size_t>(m), true, order);
            const auto pi_count = q_pochhammer(static_cast<std::size_t>(a), static_cast<std::size_t>(m), true, order);
            const auto lambda_count = q_pochhammer(static_cast<std::size_t>(b), static_cast<std::size_t>(m), true, order);
            for (int n = 0; n <= cardinality_n; ++n) {
                Count lhs = 0;
                Count rhs = 0;
                for (int j = 0; j <= n; ++j) {
                    const auto uj = static_cast<std::size_t>(j);
                    const auto rest = static_cast<std::size_t>(n - j);
                    lhs = checked_add(lhs, checked_mul(mu_count.count(uj), cp.count(rest)));
                    rhs = checked_add(rhs, checked_mul(pi_count.count(uj), lambda_count.count(rest)));
                }
                report.expect_equal(rhs, lhs, [&] { return "phi" + params.to_string() + " cardinality at n=" + std::to_string(n); });
            }
        }
    });
}

VerificationReport eo_star_suite(const SuiteOptions& options) {
    return timed_report("eo-star", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(15);
        const auto order = options.order.value_or(static_cast<std::size_t>(2 * max_n));
        report.add_range("n", 0, max_n);
        report.add_range("order", 0, static_cast<long>(order));
        const TruncatedSeries gf = eo_star_gf(order);
        const TruncatedSeries cp = gf_product({1, 1, 2}, order, Markers::Specialized);
        for (std::size_t k = 1; k <= order; k += 2) {
            report.expect_equal(0, gf.count(k), [&] { return "EO* generating function at odd q^" + std::to_string(k); });
        }
        for (std::size_t n = 0; 2 * n <= order; ++n) {
            report.expect_equal(cp.count(n), gf.count(2 * n), [&] { return "EO*(" + std::to_string(2 * n) + ") from nu vs cp(1,1,2)"; });
        }
        for (int n = 0; n <= max_n; ++n) {
            const auto label = [&] { return "EO*(" + std::to_string(2 * n) + ")"; };
            const auto eo = enumerate_eo_star(2 * n);
            const auto odd = enumerate_eo_star(2 * n + 1);
            report.expect_equal(0, static_cast<Count>(odd.size()), [&] { return "EO*(" + std::to_string(2 * n + 1) + ") by enumeration"; });
            const auto copartitions = enumerate_copartitions({1, 1, 2}, n);
            report.expect_equal(static_cast<Count>(copartitions.size()), static_cast<Count>(eo.size()),
                                [&] { return label() + " by enumeration vs cp(1,1,2)"; });
            if (2 * static_cast<std::size_t>(n) <= order) {
                report.expect_equal(gf.count(2 * static_cast<std::size_t>(n)), static_cast<Count>(eo.size()),
                                    [&] { return label() + " by enumeration vs nu"; });
            }
            std::set<Partition> image;
            for (const auto& c : copartitions) {
                const Partition e = copartition_to_eo(c);
                const auto clabel = [&] { return "EO* map on " + c.to_string(); };
                report.check(is_eo_star(e) && e.size() == 2 * c.size(),
                             [&] { return Counterexample{clabel(), "EO* partition of twice the size", e.to_string()}; });
                report.check(eo_to_copartition(e) == c, [&] { return Counterexample{clabel() + " round trip", c.to_string(), "different"}; });
                const long largest_even = [&] {
                    for (Part part : e.parts()) {
                        if (part % 2 == 0) return static_cast<long>(part);
                    }
                    return 0L;
                }();
                const auto odd_parts = std::count_if(e.parts().begin(), e.parts().end(), [](Part p) { return p % 2 != 0; });
                report.expect_equal(2 * crank(c), largest_even - odd_parts, [&] { return clabel() + " crank transport"; });
                image.insert(e);
            }
            report.check(image == std::set<Partition>(eo.begin(), eo.end()),
                         [&] { return Counterexample{label() + " image of the map", "all EO* partitions", "a different set"}; });
        }
    });
}

VerificationReport cp111_suite(const SuiteOptions& options) {
    return timed_report("cp111", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        const int bijection_n = std::min(max_n, 18);
        const int spt_n = std::min(max_n, 25);
        const std::size_t order = options.order.value_or(100);
        const CopartitionParams params{1, 1, 1};
        report.add_range("formula_vs_series_n", 0, static_cast<long>(order));
        report.add_range("enumeration_n", 0, max_n);
        report.add_range("bijection_n", 0, bijection_n);
        report.add_range("spt_n", 0, spt_n);

        const TruncatedSeries series = gf_product(params, order, Markers::Specialized);
        for (std::size_t n = 0; n <= order; ++n) {
            report.expect_equal(count_formula(params, static_cast<int>(n)), series.count(n),
                                [&] { return at(params, static_cast<long>(n)) + " formula vs series"; });
        }
        for (int n = 0; n <= max_n; ++n) {
            const Count formula = count_formula(params, n);
            report.expect_equal(formula, count_copartitions(params, n, CountMethod::Enumeration),
                                [&] { return at(params, n) + " formula vs enumeration"; });
            if (n >= 1) {
                const PartitionStatistics stats = partition_statistics(n);
                const Count previous = count_formula(params, n - 1);
                report.expect_equal(previous, stats.parts_of_size_one, [&] { return "parts of size 1 in partitions of " + std::to_string(n); });
                report.expect_equal(previous, stats.diversity_sum, [&] { return "diversity sum over partitions of " + std::to_string(n); });
            }
            if (n <= spt_n) {
                const Count p = partition_count(n);
                const Count spt = partition_statistics(n + 1).spt;
                report.check(p <= formula && formula <= spt, [&] {
                    return Counterexample{"p(n) <= " + at(params, n) + " <= spt(n+1)",
                                          std::to_string(p) + " <= x <= " + std::to_string(spt), std::to_string(formula)};
                });
            }
        }
        for (int n = 0; n <= bijection_n; ++n) {
            std::set<Copartition> image;
            std::size_t inputs = 0;
            for (int k = 0; k <= n; ++k) {
                for_each_partition(n - k, [&](const Partition& lambda) {
                    ++inputs;
                    const Copartition c = partition_to_cp111(lambda, k);
                    const auto label = [&] { return "cp111 map on " + lambda.to_string() + ", k=" + std::to_string(k); };
                    report.check(c.size() == n && c.ground_parts() == static_cast<std::size_t>(k),
                                 [&] { return Counterexample{label(), "size " + std::to_string(n), c.to_string()}; });
                    report.check(cp111_to_partition(c) == PartitionWithCount{lambda, k},
                                 [&] { return Counterexample{label() + " round trip", lambda.to_string(), "different"}; });
                    image.insert(c);
                });
            }
            const auto all = enumerate_copartitions(params, n);
            report.check(inputs == image.size() && image == std::set<Copartition>(all.begin(), all.end()), [&] {
                return Counterexample{"cp111 map onto enumeration at n=" + std::to_string(n), std::to_string(all.size()),
                                      std::to_string(image.size())};
            });
        }
    });
}

VerificationReport cp011_suite(const SuiteOptions& options) {
    return timed_report("cp011", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        const CopartitionParams params{0, 1, 1};
        report.add_range("n", 0, max_n);
        for (int n = 0; n <= max_n; ++n) {
            const Count formula = count_formula(params, n);
            const PartitionStatistics stats = partition_statistics(n);
            report.expect_equal(formula, count_copartitions(params, n, CountMethod::Enumeration),
                                [&] { return at(params, n) + " formula vs enumeration"; });
            report.expect_equal(formula, stats.total_parts, [&] { return at(params, n) + " vs total parts"; });
            report.expect_equal(formula, stats.sum_largest_parts, [&] { return at(params, n) + " vs sum of largest parts"; });
        }
        report.merge(gf_degenerate_check(params, static_cast<std::size_t>(max_n), max_n));
    });
}

VerificationReport cp001_suite(const SuiteOptions& options) {
    return timed_report("cp001", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        const int bijection_n = std::min(max_n, 14);
        const CopartitionParams params{0, 0, 1};
        report.add_range("n", 0, max_n);
        report.add_range("bijection_n", 0, bijection_n);
        for (int n = 0; n <= max_n; ++n) {
            const Count enumerated = count_copartitions(params, n, CountMethod::Enumeration);
            report.expect_equal(partition_statistics(n).sum_perimeters, enumerated, [&] { return at(params, n) + " vs sum of perimeters"; });
            const Count expected = n == 0 ? 0 : 2 * count_formula({0, 1, 1}, n) - partition_count(n);
            report.expect_equal(expected, enumerated, [&] { return at(params, n) + " vs 2cp(0,1,1) - p"; });
            report.expect_equal(count_formula(params, n), enumerated, [&] { return at(params, n) + " formula vs enumeration"; });
        }
        for (int n = 0; n <= bijection_n; ++n) {
            std::set<Copartition> image;
            std::size_t inputs = 0;
            for_each_partition(n, [&](const Partition& lambda) {
                for (const Cell cell : rim_cells(lambda)) {
                    ++inputs;
                    const Copartition c = rim_cell_to_cp001(lambda, cell);
                    const auto label = [&] {
                        return "rim map on " + lambda.to_string() + " at (" + std::to_string(cell.row) + "," +
                               std::to_string(cell.column) + ")";
                    };
                    report.check(c.size() == n, [&] { return Counterexample{label(), "size " + std::to_string(n), c.to_string()}; });
                    report.check(cp001_to_rim_cell(c) == PartitionWithCell{lambda, cell},
                                 [&] { return Counterexample{label() + " round trip", lambda.to_string(), "different"}; });
                    image.insert(c);
                }
            });
            const auto all = enumerate_copartitions(params, n);
            report.check(inputs == image.size() && image == std::set<Copartition>(all.begin(), all.end()), [&] {
                return Counterexample{"rim map onto enumeration at n=" + std::to_string(n), std::to_string(all.size()),
                                      std::to_string(image.size())};
            });
        }
    });
}

VerificationReport cp0bm_suite(const SuiteOptions& options) {
    return timed_report("cp0bm", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        report.add_range("n", 0, max_n);
        report.add_range("b,m", "(1,2),(1,3),(2,3)");
        for (const auto& [b, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            const CopartitionParams params{0, b, m};
            for (int n = 0; n <= max_n; ++n) {
                report.expect_equal(count_formula(params, n), count_copartitions(params, n, CountMethod::Enumeration),
                                    [&] { return at(params, n) + " formula vs enumeration"; });
            }
            report.merge(gf_degenerate_check(params, static_cast<std::size_t>(max_n), max_n));
        }
    });
}

VerificationReport rr_suite(const SuiteOptions& options) {
    return timed_report("rr", [&](VerificationReport& report) {
        const std::size_t order = options.order.value_or(100);
        const int max_n = options.max_n.value_or(30);
        report.add_range("order", 0, static_cast<long>(order));
        report.add_range("enumeration_n", 0, max_n);
        report.merge(rr_copartition_check(RogersRamanujan::G, order, max_n));
        report.merge(rr_copartition_check(RogersRamanujan::H, order, max_n));
    });
}

VerificationReport theta_eta_suite(const SuiteOptions& options) {
    return timed_report("theta-eta", [&](VerificationReport& report) {
        const std::size_t order = options.order.value_or(60);
        report.add_range("order", 0, static_cast<long>(order));
        for (const auto& [x, y] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{2, 3}, std::pair{1, 1}}) {
            const auto label = "f(-q^" + std::to_string(x) + ",-q^" + std::to_string(y) + ")";
            const auto ux = static_cast<std::size_t>(x);
            const auto uy = static_cast<std::size_t>(y);
            try {
                const TruncatedSeries sum = theta_f(ux, uy, order);
                const auto d = first_difference(sum, theta_product(ux, uy, order));
                report.check(!d, [&] { return Counterexample{label + " sum vs product", "equal", "differ"}; });
            } catch (const std::logic_error& e) {
                report.check(false, [&] { return Counterexample{label, "sum equals product", e.what()}; });
            }
        }
        const auto pentagonal = first_difference(theta_f(1, 2, order), q_pochhammer(1, 1, false, order));
        report.check(!pentagonal, [&] { return Counterexample{"f(-q,-q^2) vs (q;q)", "equal", "differ"}; });
        for (const auto& [a, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 5}}) {
            report.merge(eta_theta_quotient_check(a, m, order));
        }
    });
}

VerificationReport mock_theta_suite(const SuiteOptions& options) {
    return timed_report("mock-theta", [&](VerificationReport& report) {
        const std::size_t order = options.order.value_or(30);
        report.add_range("order", 0, static_cast<long>(order));
        const TruncatedSeries gf = eo_star_gf(order);
        const TruncatedSeries cp = gf_product({1, 1, 2}, order, Markers::Specialized);
        for (std::size_t n = 0; n <= order; ++n) {
            const Count expected = n % 2 != 0 ? 0 : cp.count(n / 2);
            report.expect_equal(expected, gf.count(n), [&] { return "(nu(q)+nu(-q))/2 at q^" + std::to_string(n); });
            if (n <= 30) {
                report.expect_equal(static_cast<Count>(enumerate_eo_star(static_cast<int>(n)).size()), gf.count(n),
                                    [&] { return "EO*(" + std::to_string(n) + ") by enumeration vs nu"; });
            }
        }
    });
}

VerificationReport scaling_suite(const SuiteOptions& options) {
    return timed_report("scaling", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        const int map_n = std::min(max_n, 20);
        const std::vector<int> factors = options.scale ? std::vector<int>{*options.scale} : std::vector<int>{2, 3};
        report.add_range("a,b,m", "1..4");
        report.add_range("n", 0, max_n);
        report.add_range("map_n", 0, map_n);
        for (int s : factors) {
            if (s < 1) throw std::invalid_argument("scale factor must be positive");
            report.add_range("s", s, s);
            for (const auto& params : cube(1, 4)) {
                const CopartitionParams scaled{s * params.a, s * params.b, s * params.m};
                const auto order = static_cast<std::size_t>(s * max_n);
                const TruncatedSeries big = gf_product(scaled, order, Markers::Specialized);
                for (int n = 0; n <= max_n; ++n) {
                    const Count small = count_copartitions(params, n, CountMethod::Enumeration);
                    report.expect_equal(small, count_copartitions(scaled, s * n, CountMethod::Enumeration),
                                        [&] { return at(scaled, s * n) + " vs " + at(params, n) + " by enumeration"; });
                    report.expect_equal(small, big.count(static_cast<std::size_t>(s * n)),
                                        [&] { return at(scaled, s * n) + " series vs " + at(params, n); });
                    for (int r = 1; r < s && s * n + r <= static_cast<int>(order); ++r) {
                        report.expect_equal(0, big.count(static_cast<std::size_t>(s * n + r)),
                                            [&] { return at(scaled, s * n + r) + " off the scaled lattice"; });
                    }
                    if (n > map_n || params.a > 3 || params.b > 3 || params.m > 3) continue;
                    std::vector<Copartition> image;
                    for (const auto& c : enumerate_copartitions(params, n)) {
                        image.push_back(scale(c, s));
                        report.check(unscale(image.back(), s) == c,
                                     [&] { return Counterexample{"unscale(scale(c)) for " + c.to_string(), c.to_string(), "different"}; });
                    }
                    std::sort(image.begin(), image.end());
                    auto expected = enumerate_copartitions(scaled, s * n);
                    std::sort(expected.begin(), expected.end());
                    report.check(image == expected,
                                 [&] { return Counterexample{"scale map onto " + at(scaled, s * n), "bijection", "mismatch"}; });
                }
            }
        }
    });
}

VerificationReport conjugation_suite(const SuiteOptions& options) {
    return timed_report("conjugation", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(30);
        const int map_n = std::min(max_n, 20);
        report.add_range("a,b,m", "1..4");
        report.add_range("degenerate a,b", "0..5, m 1..5");
        report.add_range("n", 0, max_n);
        report.add_range("map_n", 0, map_n);
        for (const auto& params : cube(1, 4)) {
            if (params.a > params.b) continue;
            const CopartitionParams mirror{params.b, params.a, params.m};
            for (int n = 0; n <= max_n; ++n) {
                const RefinedCount lhs = enumerated_refined(params, n);
                const RefinedCount rhs = params.a == params.b ? lhs : enumerated_refined(mirror, n);
                check_refined(report, lhs.transposed(), rhs, [&] { return at(params, n) + " refined vs " + at(mirror, n); });
            }
        }
        // Block counts reach the degenerate regimes and m = 5 cheaply.
        for (const auto& params : cube(0, 5)) {
            const CopartitionParams mirror{params.b, params.a, params.m};
            for (int n = 0; n <= max_n; ++n) {
                check_refined(report, count_refined(params, n).transposed(), count_refined(mirror, n),
                              [&] { return at(params, n) + " block counts vs " + at(mirror, n); });
            }
        }
        for (const auto& params : cube(0, 3)) {
            const CopartitionParams mirror{params.b, params.a, params.m};
            for (int n = 0; n <= map_n; ++n) {
                std::vector<Copartition> image;
                for (const auto& c : enumerate_copartitions(params, n)) {
                    const Copartition d = conjugate(c);
                    report.check(conjugate(d) == c && d.size() == c.size() && crank(d) == -crank(c),
                                 [&] { return Counterexample{"conjugate of " + c.to_string(), "involution", d.to_string()}; });
                    image.push_back(d);
                }
                std::sort(image.begin(), image.end());
                auto expected = enumerate_copartitions(mirror, n);
                std::sort(expected.begin(), expected.end());
                report.check(image == expected,
                             [&] { return Counterexample{"conjugation onto " + at(mirror, n), "bijection", "mismatch"}; });
            }
        }
    });
}

VerificationReport congruence_suite(const SuiteOptions& options) {
    return timed_report("congruence", [&](VerificationReport& report) {
        const int max_k = options.max_k.value_or(10);
        report.add_range("k", 0, max_k);
        const auto order = static_cast<std::size_t>(10 * max_k + 8);
        const TruncatedSeries eo = eo_star_gf(order);
        const TruncatedSeries cp = gf_product({1, 1, 2}, order, Markers::Specialized);
        for (int k = 0; k <= max_k; ++k) {
            const int n = 5 * k + 4;
            const Count value = count_copartitions({1, 1, 2}, n);
            report.expect_equal(value, cp.count(static_cast<std::size_t>(n)), [&] { return at({1, 1, 2}, n) + " count vs series"; });
            report.expect_equal(0, value % 5, [&] { return at({1, 1, 2}, n) + " mod 5"; });
            const Count eo_value = eo.count(static_cast<std::size_t>(10 * k + 8));
            report.expect_equal(0, eo_value % 5, [&] { return "EO*(" + std::to_string(10 * k + 8) + ") mod 5"; });
        }
    });
}

VerificationReport crank_suite(const SuiteOptions& options) {
    return timed_report("crank", [&](VerificationReport& report) {
        const int max_n = options.max_n.value_or(14);
        report.add_range("n", "5k+4 <= " + std::to_string(max_n));
        report.add_range("modulus", "5");
        for (int n = 4; n <= max_n; n += 5) {
            const CrankTally tally = crank_tally({1, 1, 2}, n, 5);
            report.expect_equal(count_copartitions({1, 1, 2}, n), tally.total(), [&] { return "crank tally total at n=" + std::to_string(n); });
            report.check(tally.equidistributed(), [&] {
                std::string counts;
                for (Count c : tally.counts) counts += (counts.empty() ? "" : ",") + std::to_string(c);
                return Counterexample{"crank residues mod 5 at n=" + std::to_string(n), "five equal classes", counts};
            });
        }
    });
}

using SuiteFn = VerificationReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"gf-triple", gf_triple_suite}, {"phi", phi_suite},           {"eo-star", eo_star_suite},
        {"cp111", cp111_suite},         {"cp011", cp011_suite},       {"cp001", cp001_suite},
        {"cp0bm", cp0bm_suite},         {"rr", rr_suite},             {"theta-eta", theta_eta_suite},
        {"mock-theta", mock_theta_suite}, {"scaling", scaling_suite}, {"conjugation", conjugation_suite},
        {"congruence", congruence_suite}, {"crank", crank_suite},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "all") {
        return timed_report("all", [&](VerificationReport& report) {
            // Suites share no state; merging in registry order keeps the report deterministic.
            std::vector<std::future<VerificationReport>> pending;
            for (const auto& entry : registry()) {
                pending.push_back(std::async(std::launch::async, entry.second, std::cref(options)));
            }
            for (auto& f : pending) report.merge(f.get());
        });
    }
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) return fn(options);
    }
    throw UnknownSuite("unknown suite \"" + name + "\"");
}

} // namespace copa
