#pragma once

#include "copa/partition.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace copa {

/// The (a, b, m) triple. `a` governs the ground, `b` the sky.
///
/// a, b >= 1 is the standard regime. a = 0 lets the ground carry zero parts
/// and forces a nonempty sky; b = 0 is the mirror image; a = b = 0 requires
/// both to be nonempty.
struct CopartitionParams {
    int a = 1;
    int b = 1;
    int m = 1;

    [[nodiscard]] bool standard() const noexcept { return a >= 1 && b >= 1; }
    [[nodiscard]] std::string to_string() const;

    /// Throws std::invalid_argument unless m >= 1 and a, b >= 0.
    void validate() const;

    friend bool operator==(const CopartitionParams&, const CopartitionParams&) = default;
    friend auto operator<=>(const CopartitionParams&, const CopartitionParams&) = default;
};

enum class CopartitionErrorCode {
    InvalidParams,
    GroundResidue,
    SkyResidue,
    GroundBelowMinimum,
    SkyBelowMinimum,
    ForbiddenZeroGroundPart,
    ForbiddenZeroSkyPart,
    EmptySkyWithZeroA,
    EmptyGroundWithZeroB,
    SplitPartTooSmall,
    NotDivisible,
};

class CopartitionError : public std::invalid_argument {
public:
    CopartitionError(CopartitionErrorCode code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    [[nodiscard]] CopartitionErrorCode code() const noexcept { return code_; }

private:
    CopartitionErrorCode code_;
};

/// A validated (a,b,m)-copartition. Only the ground and sky are stored; the
/// rectangle has one part of size m * (ground part count) per sky part.
class Copartition {
public:
    /// The empty (1,1,1)-copartition.
    Copartition() = default;

    [[nodiscard]] const CopartitionParams& params() const noexcept { return params_; }
    [[nodiscard]] const Partition& ground() const noexcept { return ground_; }
    [[nodiscard]] const Partition& sky() const noexcept { return sky_; }

    [[nodiscard]] std::size_t ground_parts() const noexcept { return ground_.num_parts(); }
    [[nodiscard]] std::size_t sky_parts() const noexcept { return sky_.num_parts(); }

    /// Each rectangle part, m * ground_parts().
    [[nodiscard]] long rectangle_width() const noexcept;

    /// The rectangle as a partition. Empty when there are no ground parts,
    /// even though the rectangle nominally has sky_parts() parts of size 0.
    [[nodiscard]] Partition rectangle() const;

    /// |ground| + m * ground_parts * sky_parts + |sky|.
    [[nodiscard]] long size() const noexcept;

    [[nodiscard]] bool empty() const noexcept { return ground_.empty() && sky_.empty(); }

    /// "(ground, rectangle, sky)" in canonical partition text.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Copartition&, const Copartition&) = default;
    friend auto operator<=>(const Copartition&, const Copartition&) = default;

private:
    friend Copartition make_copartition(const CopartitionParams&, Partition, Partition);

    CopartitionParams params_{};
    Partition ground_;
    Partition sky_;
};

/// Validates and builds a copartition. Throws CopartitionError with a code
/// naming the violated rule.
[[nodiscard]] Copartition make_copartition(const CopartitionParams& params, Partition ground, Partition sky);

/// The enlarged sky: the i-th part is m * ground_parts + sky_i.
[[nodiscard]] Partition enlarged_sky(const Copartition& c);

struct SplitSky {
    Partition rectangle;
    Partition sky;
};

/// Left inverse of `enlarged_sky` given the number of ground parts. Throws
/// CopartitionError(SplitPartTooSmall) when a fused part cannot hold the
/// rectangle plus a minimal sky part, and the residue codes when a part is
/// in the wrong class.
[[nodiscard]] SplitSky split_enlarged_sky(const Partition& fused, std::size_t ground_parts,
                                          const CopartitionParams& params);

/// Reflection of the diagram: params (b, a, m), ground and sky swapped.
[[nodiscard]] Copartition conjugate(const Copartition& c);

/// Multiplies a, b, m and every ground and sky part by `factor`.
[[nodiscard]] Copartition scale(const Copartition& c, int factor);

/// Inverse of `scale`. Throws CopartitionError(NotDivisible) if the
/// parameters or any part is not a multiple of `factor`.
[[nodiscard]] Copartition unscale(const Copartition& c, int factor);

/// Ground part count minus sky part count.
[[nodiscard]] long crank(const Copartition& c);

} // namespace copa
