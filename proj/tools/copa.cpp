#include "copa/bijections.hpp"
#include "copa/diagram.hpp"
#include "copa/enumeration.hpp"
#include "copa/generating_functions.hpp"
#include "copa/json_io.hpp"
#include "copa/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace {

using copa::Count;
using copa::CopartitionParams;
using json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Errors that are the caller's fault: bad flags, malformed or invalid input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamsFlags {
    int a = 1;
    int b = 1;
    int m = 1;

    void add(CLI::App* cmd, bool required = true) {
        auto* oa = cmd->add_option("--a", a, "ground residue");
        auto* ob = cmd->add_option("--b", b, "sky residue");
        auto* om = cmd->add_option("--m", m, "modulus");
        if (required) {
            oa->required();
            ob->required();
            om->required();
        }
    }
    [[nodiscard]] CopartitionParams params() const {
        CopartitionParams p{a, b, m};
        p.validate();
        return p;
    }
};

std::string read_input(const std::string& spec) {
    if (spec == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw UsageError("cannot read " + spec.substr(1));
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    return spec;
}

json parse_input(const std::string& spec) {
    try {
        return json::parse(read_input(spec));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
}

copa::Partition partition_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("input is missing \"") + key + "\"");
    return copa::partition_from_json(j.at(key));
}

std::size_t capped_order(std::size_t order) {
    if (const char* cap = std::getenv("COPA_MAX_ORDER")) {
        const auto limit = static_cast<std::size_t>(std::stoul(cap));
        if (order > limit) {
            std::cerr << "order " << order << " capped to COPA_MAX_ORDER=" << limit << '\n';
            return limit;
        }
    }
    return order;
}

// --- count -----------------------------------------------------------------

struct CountFlags {
    ParamsFlags params;
    int n = 0;
    std::optional<std::size_t> w;
    std::optional<std::size_t> s;
    std::string method = "auto";
    bool crosscheck = false;
};

Count refined_sum(const copa::RefinedCount& r, const CountFlags& f) {
    Count total = 0;
    for (const auto& [key, value] : r.table) {
        if ((!f.w || key.first == *f.w) && (!f.s || key.second == *f.s)) total = copa::checked_add(total, value);
    }
    return total;
}

copa::RefinedCount refined_by_enumeration(const CopartitionParams& p, int n) {
    copa::RefinedCount out;
    copa::for_each_copartition(p, n, [&](const copa::Copartition& c) { ++out.table[{c.ground_parts(), c.sky_parts()}]; });
    return out;
}

copa::RefinedCount refined_by_series(const CopartitionParams& p, int n) {
    const auto series = copa::gf_double_sum(p, static_cast<std::size_t>(n));
    copa::RefinedCount out;
    for (const auto& [mono, c] : series.coefficient(static_cast<std::size_t>(n)).terms()) out.table[{mono.y, mono.x}] = c;
    return out;
}

int run_count(const CountFlags& f) {
    const CopartitionParams p = f.params.params();
    if (f.n < 0) throw UsageError("--n must be non-negative");
    const bool refined = f.w || f.s;

    std::vector<std::pair<std::string, Count>> results;
    const auto add = [&](const std::string& name, const std::function<Count()>& fn) { results.emplace_back(name, fn()); };
    if (refined) {
        if (f.method == "formula") throw UsageError("refined counts have no closed form");
        if (f.crosscheck || f.method == "enum") add("enumeration", [&] { return refined_sum(refined_by_enumeration(p, f.n), f); });
        if (f.crosscheck || f.method == "series") add("series", [&] { return refined_sum(refined_by_series(p, f.n), f); });
        if (f.crosscheck || f.method == "auto") add("blocks", [&] { return refined_sum(copa::count_refined(p, f.n), f); });
    } else {
        const std::map<std::string, copa::CountMethod> methods{{"auto", copa::CountMethod::Auto},
                                                               {"enum", copa::CountMethod::Enumeration},
                                                               {"series", copa::CountMethod::Series},
                                                               {"formula", copa::CountMethod::Formula}};
        if (f.method == "formula" && !copa::has_closed_form(p)) throw UsageError("no closed form for " + p.to_string());
        if (f.crosscheck) {
            add("enumeration", [&] { return copa::count_copartitions(p, f.n, copa::CountMethod::Enumeration); });
            add("series", [&] { return copa::count_copartitions(p, f.n, copa::CountMethod::Series); });
            if (p.standard()) {
                add("product", [&] {
                    return copa::gf_product(p, static_cast<std::size_t>(f.n), copa::Markers::Specialized).count(static_cast<std::size_t>(f.n));
                });
            }
            add("blocks", [&] { return copa::count_refined(p, f.n).total(); });
            if (copa::has_closed_form(p)) add("formula", [&] { return copa::count_formula(p, f.n); });
        } else {
            add(f.method, [&] { return copa::count_copartitions(p, f.n, methods.at(f.method)); });
        }
    }

    std::cout << results.front().second << '\n';
    bool agree = true;
    for (const auto& [name, value] : results) {
        if (value != results.front().second) agree = false;
    }
    if (!agree) {
        std::cerr << "crosscheck disagreement:";
        for (const auto& [name, value] : results) std::cerr << ' ' << name << '=' << value;
        std::cerr << '\n';
        return kExitFailure;
    }
    return 0;
}

// --- table -----------------------------------------------------------------

int run_table(const ParamsFlags& pf, int max_n, const std::string& format, bool refined) {
    const CopartitionParams p = pf.params();
    if (max_n < 0) throw UsageError("--max-n must be non-negative");
    json rows = json::array();
    if (format == "csv") std::cout << (refined ? "a,b,m,n,w,s,count\n" : "a,b,m,n,count\n");
    for (int n = 0; n <= max_n; ++n) {
        json row;
        row["a"] = p.a;
        row["b"] = p.b;
        row["m"] = p.m;
        row["n"] = n;
        row["count"] = copa::count_copartitions(p, n);
        if (refined) {
            json cells = json::array();
            for (const auto& [key, value] : copa::count_refined(p, n).table) {
                cells.push_back({{"w", key.first}, {"s", key.second}, {"count", value}});
                if (format == "csv") {
                    std::cout << p.a << ',' << p.b << ',' << p.m << ',' << n << ',' << key.first << ',' << key.second << ','
                              << value << '\n';
                }
            }
            row["refined"] = cells;
        } else if (format == "csv") {
            std::cout << p.a << ',' << p.b << ',' << p.m << ',' << n << ',' << row["count"].get<Count>() << '\n';
        }
        rows.push_back(row);
    }
    if (format == "json") std::cout << rows.dump(2) << '\n';
    return 0;
}

// --- render / enumerate / crank ----------------------------------------------

copa::Copartition copartition_input(const std::string& input) {
    return copa::copartition_from_json(parse_input(input));
}

int run_render(const std::string& input, const std::string& format, const std::string& out_path, bool symbolic) {
    const copa::Copartition c = copartition_input(input);
    const auto style = symbolic ? copa::LabelStyle::Symbolic : copa::LabelStyle::Numeric;
    std::string text = format == "svg" ? copa::render_svg(c, style) : copa::render_ascii(c, style);
    if (!text.empty() && text.back() != '\n') text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_enumerate(const ParamsFlags& pf, int n) {
    if (n < 0) throw UsageError("--n must be non-negative");
    copa::for_each_copartition(pf.params(), n, [](const copa::Copartition& c) { std::cout << copa::to_json_line(c) << '\n'; });
    return 0;
}

int run_crank(const ParamsFlags& pf, int n, int modulus, const std::string& format) {
    if (n < 0) throw UsageError("--n must be non-negative");
    if (modulus < 1) throw UsageError("--mod must be positive");
    const copa::CrankTally tally = copa::crank_tally(pf.params(), n, modulus);
    if (format == "json") {
        json counts = json::object();
        for (std::size_t r = 0; r < tally.counts.size(); ++r) counts[std::to_string(r)] = tally.counts[r];
        json out;
        out["a"] = pf.a;
        out["b"] = pf.b;
        out["m"] = pf.m;
        out["n"] = n;
        out["modulus"] = modulus;
        out["counts"] = counts;
        out["equidistributed"] = tally.equidistributed();
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "residue,count\n";
        for (std::size_t r = 0; r < tally.counts.size(); ++r) std::cout << r << ',' << tally.counts[r] << '\n';
    }
    return 0;
}

// --- series ----------------------------------------------------------------

struct SeriesFlags {
    ParamsFlags params;
    std::string kind = "product";
    std::size_t order = 20;
    bool markers = false;
    std::size_t x = 1;
    std::size_t y = 2;
};

int run_series(const SeriesFlags& f) {
    const std::size_t order = capped_order(f.order);
    const auto markers = f.markers ? copa::Markers::Keep : copa::Markers::Specialized;
    copa::TruncatedSeries series(order);
    if (f.kind == "product") {
        series = copa::gf_product(f.params.params(), order, markers);
    } else if (f.kind == "double-sum") {
        series = copa::gf_double_sum(f.params.params(), order, markers);
    } else if (f.kind == "rr-g" || f.kind == "rr-h") {
        series = copa::rr_function(f.kind == "rr-g" ? copa::RogersRamanujan::G : copa::RogersRamanujan::H,
                                   copa::SeriesForm::Sum, order);
    } else if (f.kind == "theta") {
        series = copa::theta_f(f.x, f.y, order);
    } else if (f.kind == "nu") {
        series = copa::mock_theta_nu(order);
    } else {
        series = copa::eo_star_gf(order);
    }
    std::cout << copa::to_json(series, f.markers && (f.kind == "product" || f.kind == "double-sum")).dump() << '\n';
    return 0;
}

// --- bijection -------------------------------------------------------------

json match_json(const copa::PhiMatch& m) {
    return {{"j", m.lambda_index}, {"lambda_part", m.lambda_part}, {"i", m.pi_index}, {"pi_part", m.pi_part}};
}

int run_bijection(const std::string& name, const std::string& input) {
    const json in = parse_input(input);
    json out;
    bool size_ok = true;
    if (name == "phi") {
        if (!in.is_object()) throw UsageError("phi input must be an object");
        for (const char* key : {"a", "b", "m"}) {
            if (!in.contains(key) || !in.at(key).is_number_integer()) throw UsageError(std::string("\"") + key + "\" must be an integer");
        }
        const CopartitionParams p{in.at("a").get<int>(), in.at("b").get<int>(), in.at("m").get<int>()};
        const auto pi = partition_field(in, "pi");
        const auto lambda = partition_field(in, "lambda");
        const copa::PhiResult r = copa::phi(p, pi, lambda);
        out["mu"] = copa::to_json(r.mu);
        out["copartition"] = copa::to_json(r.copartition);
        out["k"] = r.threshold;
        out["matches"] = json::array();
        for (const auto& m : r.matches) out["matches"].push_back(match_json(m));
        size_ok = pi.size() + lambda.size() == r.mu.size() + r.copartition.size();
    } else if (name == "phi-inverse") {
        const auto mu = partition_field(in, "mu");
        if (!in.contains("copartition")) throw UsageError("input is missing \"copartition\"");
        const auto c = copa::copartition_from_json(in.at("copartition"));
        const copa::PhiInverseResult r = copa::phi_inverse(mu, c);
        out["pi"] = copa::to_json(r.pi);
        out["lambda"] = copa::to_json(r.lambda);
        out["steps"] = json::array();
        for (const auto& s : r.steps) out["steps"].push_back({{"mu_part", s.mu_part}, {"j", s.j}});
        size_ok = r.pi.size() + r.lambda.size() == mu.size() + c.size();
    } else if (name == "eo") {
        const auto c = copa::copartition_from_json(in);
        const auto e = copa::copartition_to_eo(c);
        out["partition"] = copa::to_json(e);
        size_ok = e.size() == 2 * c.size();
    } else if (name == "eo-inverse") {
        const auto e = partition_field(in, "partition");
        const auto c = copa::eo_to_copartition(e);
        out["copartition"] = copa::to_json(c);
        size_ok = e.size() == 2 * c.size();
    } else if (name == "cp111") {
        const auto lambda = partition_field(in, "lambda");
        if (!in.contains("k") || !in.at("k").is_number_integer()) throw UsageError("\"k\" must be an integer");
        const int k = in.at("k").get<int>();
        const auto c = copa::partition_to_cp111(lambda, k);
        out["copartition"] = copa::to_json(c);
        size_ok = c.size() == lambda.size() + k;
    } else if (name == "cp111-inverse") {
        const auto c = copa::copartition_from_json(in);
        const auto r = copa::cp111_to_partition(c);
        out["lambda"] = copa::to_json(r.lambda);
        out["k"] = r.k;
        size_ok = c.size() == r.lambda.size() + r.k;
    } else if (name == "rim") {
        const auto lambda = partition_field(in, "lambda");
        if (!in.contains("cell") || !in.at("cell").is_array() || in.at("cell").size() != 2) {
            throw UsageError("\"cell\" must be [row, column]");
        }
        const copa::Cell cell{in.at("cell").at(0).get<int>(), in.at("cell").at(1).get<int>()};
        const auto c = copa::rim_cell_to_cp001(lambda, cell);
        out["copartition"] = copa::to_json(c);
        size_ok = c.size() == lambda.size();
    } else {
        const auto c = copa::copartition_from_json(in);
        const auto r = copa::cp001_to_rim_cell(c);
        out["lambda"] = copa::to_json(r.lambda);
        out["cell"] = {r.cell.row, r.cell.column};
        size_ok = c.size() == r.lambda.size();
    }
    out["size_preserved"] = size_ok;
    std::cout << out.dump() << '\n';
    return size_ok ? 0 : kExitFailure;
}

// --- verify ----------------------------------------------------------------

int run_verify(const std::string& suite, const copa::SuiteOptions& options, bool as_json) {
    copa::VerificationReport report("");
    try {
        report = copa::run_suite(suite, options);
    } catch (const copa::UnknownSuite& e) {
        throw UsageError(e.what());
    }
    if (as_json) {
        std::cout << report.to_json().dump(2) << '\n';
    } else {
        std::cout << report.summary() << '\n';
    }
    std::cerr << suite << ": " << report.wall_seconds() << " s\n";
    return report.ok() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"copa: (a,b,m)-copartitions, their generating functions and bijections"};
    app.require_subcommand(1);

    CountFlags count_flags;
    auto* count = app.add_subcommand("count", "Count copartitions of n, optionally refined by part counts");
    count_flags.params.add(count);
    count->add_option("--n", count_flags.n, "size")->required();
    count->add_option("--w", count_flags.w, "number of ground parts");
    count->add_option("--s", count_flags.s, "number of sky parts");
    count->add_option("--method", count_flags.method, "counting method")
        ->check(CLI::IsMember({"auto", "enum", "series", "formula"}));
    count->add_flag("--crosscheck", count_flags.crosscheck, "run every available method and compare");

    ParamsFlags table_params;
    int table_max_n = 10;
    std::string table_format = "csv";
    bool table_refined = false;
    auto* table = app.add_subcommand("table", "Counts for n = 0..max-n");
    table_params.add(table);
    table->add_option("--max-n", table_max_n, "largest n")->required();
    table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--refined", table_refined, "break counts down by (w, s)");

    std::string suite;
    copa::SuiteOptions suite_options;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "suite name or \"all\"")->required();
    verify->add_option("--max-n", suite_options.max_n, "size bound");
    verify->add_option("--max-k", suite_options.max_k, "progression bound for the congruence suite");
    verify->add_option("--order", suite_options.order, "series truncation order");
    verify->add_option("--s", suite_options.scale, "single scaling factor");
    verify->add_flag("--json", verify_json, "print the full report as JSON");

    std::string render_input;
    std::string render_format = "ascii";
    std::string render_out;
    bool render_symbolic = false;
    auto* render = app.add_subcommand("render", "Draw the diagram of a copartition");
    render->add_option("--input", render_input, "copartition JSON, @file or - for stdin")->required();
    render->add_option("--format", render_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", render_out, "write to this file instead of stdout");
    render->add_flag("--symbolic", render_symbolic, "label cells a, b, m instead of their values");

    ParamsFlags enum_params;
    int enum_n = 0;
    auto* enumerate = app.add_subcommand("enumerate", "List copartitions of n as JSON lines");
    enum_params.add(enumerate);
    enumerate->add_option("--n", enum_n, "size")->required();

    SeriesFlags series_flags;
    auto* series = app.add_subcommand("series", "Print a truncated q-series as JSON");
    series->add_option("--kind", series_flags.kind, "which series")
        ->check(CLI::IsMember({"product", "double-sum", "rr-g", "rr-h", "theta", "nu", "eo-star"}));
    series_flags.params.add(series, false);
    series->add_option("--order", series_flags.order, "truncation order");
    series->add_flag("--markers", series_flags.markers, "keep the x (sky) and y (ground) markers");
    series->add_option("--x", series_flags.x, "theta: first exponent");
    series->add_option("--y", series_flags.y, "theta: second exponent");

    std::string bijection_name;
    std::string bijection_input;
    auto* bijection = app.add_subcommand("bijection", "Apply a bijection to JSON input");
    bijection->add_option("name", bijection_name, "bijection")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inverse", "eo", "eo-inverse", "cp111", "cp111-inverse", "rim", "rim-inverse"}));
    bijection->add_option("--input", bijection_input, "JSON, @file or - for stdin")->required();

    ParamsFlags crank_params;
    int crank_n = 0;
    int crank_mod = 5;
    std::string crank_format = "csv";
    auto* crank = app.add_subcommand("crank", "Tally crank residues of copartitions of n");
    crank_params.add(crank);
    crank->add_option("--n", crank_n, "size")->required();
    crank->add_option("--mod", crank_mod, "modulus");
    crank->add_option("--format", crank_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*count) return run_count(count_flags);
        if (*table) return run_table(table_params, table_max_n, table_format, table_refined);
        if (*verify) {
            if (suite_options.order) suite_options.order = capped_order(*suite_options.order);
            return run_verify(suite, suite_options, verify_json);
        }
        if (*render) return run_render(render_input, render_format, render_out, render_symbolic);
        if (*enumerate) return run_enumerate(enum_params, enum_n);
        if (*series) return run_series(series_flags);
        if (*bijection) return run_bijection(bijection_name, bijection_input);
        if (*crank) return run_crank(crank_params, crank_n, crank_mod, crank_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
