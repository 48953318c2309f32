#pragma once

#include "copa/copartition.hpp"
#include "copa/series.hpp"

#include <json.hpp>

#include <string>

namespace copa {

[[nodiscard]] nlohmann::ordered_json to_json(const Partition& p);

/// Accepts a JSON array of non-negative integers in non-increasing order.
[[nodiscard]] Partition partition_from_json(const nlohmann::ordered_json& j);

/// {"a":int,"b":int,"m":int,"ground":[...],"sky":[...]}
[[nodiscard]] nlohmann::ordered_json to_json(const Copartition& c);

/// Inverse of `to_json`; rejects anything make_copartition rejects.
[[nodiscard]] Copartition copartition_from_json(const nlohmann::ordered_json& j);

/// Single-line canonical form of the copartition JSON.
[[nodiscard]] std::string to_json_line(const Copartition& c);

/// Univariate series: [{"n":0,"coeff":1},...]. With markers:
/// [{"n":0,"terms":[{"s":0,"w":0,"coeff":1}]},...].
[[nodiscard]] nlohmann::ordered_json to_json(const TruncatedSeries& series, bool with_markers);

} // namespace copa
