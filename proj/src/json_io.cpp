#include "copa/json_io.hpp"

#include <stdexcept>

namespace copa {

nlohmann::ordered_json to_json(const Partition& p) {
    auto out = nlohmann::ordered_json::array();
    for (Part part : p.parts()) out.push_back(part);
    return out;
}

Partition partition_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<Part> parts;
    parts.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(v.get<Part>());
    }
    return Partition::with_zeros(std::move(parts));
}

nlohmann::ordered_json to_json(const Copartition& c) {
    nlohmann::ordered_json out;
    out["a"] = c.params().a;
    out["b"] = c.params().b;
    out["m"] = c.params().m;
    out["ground"] = to_json(c.ground());
    out["sky"] = to_json(c.sky());
    return out;
}

Copartition copartition_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("copartition must be a JSON object");
    for (const char* key : {"a", "b", "m", "ground", "sky"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("copartition JSON is missing \"") + key + "\"");
    }
    for (const char* key : {"a", "b", "m"}) {
        if (!j.at(key).is_number_integer()) throw std::invalid_argument(std::string("\"") + key + "\" must be an integer");
    }
    CopartitionParams params{j.at("a").get<int>(), j.at("b").get<int>(), j.at("m").get<int>()};
    return make_copartition(params, partition_from_json(j.at("ground")), partition_from_json(j.at("sky")));
}

std::string to_json_line(const Copartition& c) {
    return to_json(c).dump();
}

nlohmann::ordered_json to_json(const TruncatedSeries& series, bool with_markers) {
    auto out = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= series.order(); ++n) {
        nlohmann::ordered_json entry;
        entry["n"] = n;
        if (with_markers) {
            auto terms = nlohmann::ordered_json::array();
            for (const auto& [mono, c] : series.coefficient(n).terms()) {
                terms.push_back({{"s", mono.x}, {"w", mono.y}, {"coeff", c}});
            }
            entry["terms"] = terms;
        } else {
            entry["coeff"] = series.count(n);
        }
        out.push_back(entry);
    }
    return out;
}

} // namespace copa
