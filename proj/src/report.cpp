#include "copa/report.hpp"

#include <sstream>

namespace copa {

VerificationReport::VerificationReport(std::string suite) : suite_(std::move(suite)) {}

void VerificationReport::add_range(std::string name, std::string value) {
    ranges_.emplace_back(std::move(name), std::move(value));
}

void VerificationReport::add_range(const std::string& name, long lo, long hi) {
    add_range(name, std::to_string(lo) + ".." + std::to_string(hi));
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& [name, value] : other.ranges_) ranges_.emplace_back(other.suite_ + "." + name, value);
    attempted_ += other.attempted_;
    passed_ += other.passed_;
    if (!counterexample_ && other.counterexample_) {
        counterexample_ = other.counterexample_;
        counterexample_->check = other.suite_ + ": " + counterexample_->check;
    }
    wall_seconds_ += other.wall_seconds_;
}

nlohmann::ordered_json VerificationReport::to_json(bool include_wall_time) const {
    nlohmann::ordered_json out;
    out["suite"] = suite_;
    out["passed"] = ok();
    auto ranges = nlohmann::ordered_json::object();
    for (const auto& [name, value] : ranges_) ranges[name] = value;
    out["ranges"] = ranges;
    out["checks_attempted"] = attempted_;
    out["checks_passed"] = passed_;
    if (counterexample_) {
        out["counterexample"] = {{"check", counterexample_->check},
                                 {"expected", counterexample_->expected},
                                 {"actual", counterexample_->actual}};
    } else {
        out["counterexample"] = nullptr;
    }
    if (include_wall_time) out["wall_seconds"] = wall_seconds_;
    return out;
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << (ok() ? "PASS " : "FAIL ") << suite_ << " (" << passed_ << '/' << attempted_ << " checks)";
    if (counterexample_) {
        out << ": " << counterexample_->check << " expected " << counterexample_->expected << ", got "
            << counterexample_->actual;
    }
    return out.str();
}

} // namespace copa
