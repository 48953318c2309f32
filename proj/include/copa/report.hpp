#pragma once

#include "copa/checked_int.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace copa {

struct Counterexample {
    std::string check;
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite. Only the first failure is kept.
class VerificationReport {
public:
    explicit VerificationReport(std::string suite);

    [[nodiscard]] const std::string& suite() const noexcept { return suite_; }
    [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& ranges() const noexcept { return ranges_; }
    [[nodiscard]] std::size_t attempted() const noexcept { return attempted_; }
    [[nodiscard]] std::size_t passed() const noexcept { return passed_; }
    [[nodiscard]] bool ok() const noexcept { return passed_ == attempted_; }
    [[nodiscard]] const std::optional<Counterexample>& counterexample() const noexcept { return counterexample_; }
    [[nodiscard]] double wall_seconds() const noexcept { return wall_seconds_; }

    void add_range(std::string name, std::string value);
    void add_range(const std::string& name, long lo, long hi);

    /// Records one check. `describe` is called only on failure and returns
    /// the counterexample.
    template <class Describe>
    bool check(bool ok, Describe&& describe) {
        ++attempted_;
        if (ok) {
            ++passed_;
        } else if (!counterexample_) {
            counterexample_ = describe();
        }
        return ok;
    }

    /// Records expected == actual; `label` is called only on failure.
    template <class Label>
    bool expect_equal(Count expected, Count actual, Label&& label) {
        return check(expected == actual, [&] {
            return Counterexample{label(), std::to_string(expected), std::to_string(actual)};
        });
    }

    /// Appends another report's checks and ranges (its suite name prefixes
    /// the ranges).
    void merge(const VerificationReport& other);

    void set_wall_seconds(double seconds) noexcept { wall_seconds_ = seconds; }

    /// Machine-readable form. Wall time is included only when asked so the
    /// data stays deterministic by default.
    [[nodiscard]] nlohmann::ordered_json to_json(bool include_wall_time = false) const;

    /// "PASS suite (attempted/passed)" or "FAIL suite ... first counterexample".
    [[nodiscard]] std::string summary() const;

private:
    std::string suite_;
    std::vector<std::pair<std::string, std::string>> ranges_;
    std::size_t attempted_ = 0;
    std::size_t passed_ = 0;
    std::optional<Counterexample> counterexample_;
    double wall_seconds_ = 0.0;
};

/// Runs `body` on a fresh report and records its wall time.
template <class Body>
VerificationReport timed_report(std::string suite, Body&& body) {
    VerificationReport report(std::move(suite));
    const auto start = std::chrono::steady_clock::now();
    body(report);
    report.set_wall_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return report;
}

} // namespace copa
