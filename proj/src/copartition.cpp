#include "copa/copartition.hpp"

#include <sstream>

namespace copa {

namespace {

struct SideRules {
    int minimum;
    CopartitionErrorCode zero;
    CopartitionErrorCode residue;
    CopartitionErrorCode below;
    const char* name;
};

void check_side(const Partition& parts, const SideRules& rules, int modulus) {
    const int residue = rules.minimum % modulus;
    for (Part p : parts.parts()) {
        if (p == 0 && rules.minimum != 0) {
            throw CopartitionError(rules.zero, std::string(rules.name) + " may not contain zero parts");
        }
        if (p % modulus != residue) {
            throw CopartitionError(rules.residue, std::string(rules.name) + " part " + std::to_string(p) +
                                                      " is not congruent to " + std::to_string(rules.minimum) +
                                                      " mod " + std::to_string(modulus));
        }
        if (p < rules.minimum) {
            throw CopartitionError(rules.below, std::string(rules.name) + " part " + std::to_string(p) +
                                                    " is below " + std::to_string(rules.minimum));
        }
    }
}

SideRules ground_rules(int a) {
    return {a, CopartitionErrorCode::ForbiddenZeroGroundPart, CopartitionErrorCode::GroundResidue,
            CopartitionErrorCode::GroundBelowMinimum, "ground"};
}

SideRules sky_rules(int b) {
    return {b, CopartitionErrorCode::ForbiddenZeroSkyPart, CopartitionErrorCode::SkyResidue,
            CopartitionErrorCode::SkyBelowMinimum, "sky"};
}

Partition scale_parts(const Partition& p, int factor) {
    std::vector<Part> parts(p.parts().begin(), p.parts().end());
    for (Part& part : parts) part *= factor;
    return Partition::with_zeros(std::move(parts));
}

Partition unscale_parts(const Partition& p, int factor) {
    std::vector<Part> parts(p.parts().begin(), p.parts().end());
    for (Part& part : parts) {
        if (part % factor != 0) {
            throw CopartitionError(CopartitionErrorCode::NotDivisible,
                                   "part " + std::to_string(part) + " is not divisible by " + std::to_string(factor));
        }
        part /= factor;
    }
    return Partition::with_zeros(std::move(parts));
}

} // namespace

std::string CopartitionParams::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(m) + ")";
}

void CopartitionParams::validate() const {
    if (m < 1 || a < 0 || b < 0) {
        throw CopartitionError(CopartitionErrorCode::InvalidParams,
                               "copartition parameters " + to_string() + " need m >= 1 and a, b >= 0");
    }
}

long Copartition::rectangle_width() const noexcept {
    return static_cast<long>(params_.m) * static_cast<long>(ground_.num_parts());
}

Partition Copartition::rectangle() const {
    if (ground_.empty()) return {};
    return Partition(std::vector<Part>(sky_.num_parts(), static_cast<Part>(rectangle_width())));
}

long Copartition::size() const noexcept {
    return ground_.size() + rectangle_width() * static_cast<long>(sky_.num_parts()) + sky_.size();
}

std::string Copartition::to_string() const {
    std::ostringstream out;
    out << params_.to_string() << ':' << '(' << ground_.to_string() << ',' << rectangle().to_string() << ','
        << sky_.to_string() << ')';
    return out.str();
}

Copartition make_copartition(const CopartitionParams& params, Partition ground, Partition sky) {
    params.validate();
    check_side(ground, ground_rules(params.a), params.m);
    check_side(sky, sky_rules(params.b), params.m);
    if (params.a == 0 && sky.empty()) {
        throw CopartitionError(CopartitionErrorCode::EmptySkyWithZeroA, "a = 0 requires a nonempty sky");
    }
    if (params.b == 0 && ground.empty()) {
        throw CopartitionError(CopartitionErrorCode::EmptyGroundWithZeroB, "b = 0 requires a nonempty ground");
    }
    Copartition c;
    c.params_ = params;
    c.ground_ = std::move(ground);
    c.sky_ = std::move(sky);
    return c;
}

Partition enlarged_sky(const Copartition& c) {
    std::vector<Part> parts(c.sky().parts().begin(), c.sky().parts().end());
    const auto width = static_cast<Part>(c.rectangle_width());
    for (Part& p : parts) p += width;
    return Partition::with_zeros(std::move(parts));
}

SplitSky split_enlarged_sky(const Partition& fused, std::size_t ground_parts, const CopartitionParams& params) {
    params.validate();
    const long width = static_cast<long>(params.m) * static_cast<long>(ground_parts);
    std::vector<Part> sky;
    sky.reserve(fused.num_parts());
    for (Part p : fused.parts()) {
        if (p % params.m != params.b % params.m) {
            throw CopartitionError(CopartitionErrorCode::SkyResidue,
                                   "enlarged sky part " + std::to_string(p) + " has the wrong residue");
        }
        if (p < width + params.b) {
            throw CopartitionError(CopartitionErrorCode::SplitPartTooSmall,
                                   "enlarged sky part " + std::to_string(p) + " cannot hold " +
                                       std::to_string(ground_parts) + " ground columns");
        }
        sky.push_back(static_cast<Part>(p - width));
    }
    SplitSky out;
    out.sky = Partition::with_zeros(std::move(sky));
    if (ground_parts > 0) {
        out.rectangle = Partition(std::vector<Part>(fused.num_parts(), static_cast<Part>(width)));
    }
    return out;
}

Copartition conjugate(const Copartition& c) {
    const auto& p = c.params();
    return make_copartition({p.b, p.a, p.m}, c.sky(), c.ground());
}

Copartition scale(const Copartition& c, int factor) {
    if (factor < 1) throw std::invalid_argument("scale factor must be positive");
    const auto& p = c.params();
    return make_copartition({p.a * factor, p.b * factor, p.m * factor}, scale_parts(c.ground(), factor),
                            scale_parts(c.sky(), factor));
}

Copartition unscale(const Copartition& c, int factor) {
    if (factor < 1) throw std::invalid_argument("scale factor must be positive");
    const auto& p = c.params();
    if (p.a % factor != 0 || p.b % factor != 0 || p.m % factor != 0) {
        throw CopartitionError(CopartitionErrorCode::NotDivisible,
                               "parameters " + p.to_string() + " are not divisible by " + std::to_string(factor));
    }
    return make_copartition({p.a / factor, p.b / factor, p.m / factor}, unscale_parts(c.ground(), factor),
                            unscale_parts(c.sky(), factor));
}

long crank(const Copartition& c) {
    return static_cast<long>(c.ground_parts()) - static_cast<long>(c.sky_parts());
}

} // namespace copa
