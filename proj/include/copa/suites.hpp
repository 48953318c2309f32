#pragma once

#include "copa/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace copa {

/// Overrides for suite bounds. Unset fields take the suite's default, which
/// is the bound used by the acceptance run.
struct SuiteOptions {
    std::optional<int> max_n;
    std::optional<int> max_k;
    std::optional<std::size_t> order;
    std::optional<int> scale;  // scaling suite: a single factor instead of {2, 3}
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Suite names in run order, without "all".
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs a named suite, or every suite for "all". Throws UnknownSuite.
[[nodiscard]] VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace copa
