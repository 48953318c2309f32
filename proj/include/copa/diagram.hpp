#pragma once

#include "copa/copartition.hpp"

#include <string>
#include <vector>

namespace copa {

enum class CellKind { Ground, Sky, Modulus };

enum class LabelStyle {
    Numeric,   // cells show the values of a, b and m
    Symbolic,  // cells show "a", "b", "m" ("0" when a or b is zero)
};

/// The copartition diagram: `rectangle_rows` rows of `rectangle_columns`
/// m-cells, each followed by the m-modular row of the matching sky part,
/// then the conjugated m-modular diagram of the ground (one row of a-cells,
/// then rows of m-cells). The boundary runs along the bottom and right edge
/// of the rectangle block.
struct Diagram {
    CopartitionParams params;
    std::size_t rectangle_rows = 0;     // number of sky parts
    std::size_t rectangle_columns = 0;  // number of ground parts
    std::vector<std::vector<CellKind>> rows;

    [[nodiscard]] bool empty() const noexcept { return rows.empty(); }
    [[nodiscard]] std::string label(CellKind kind, LabelStyle style) const;

    /// Label grid only, without the boundary.
    [[nodiscard]] std::vector<std::vector<std::string>> labels(LabelStyle style = LabelStyle::Numeric) const;

    /// Row lengths of the grid, i.e. the underlying Young diagram.
    [[nodiscard]] std::vector<std::size_t> shape() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

[[nodiscard]] Diagram make_diagram(const Copartition& c);

/// Recovers the copartition from a diagram with its boundary.
[[nodiscard]] Copartition copartition_from_diagram(const Diagram& d);

/// Text rendering. Rectangle cells and sky cells are separated by "|", and a
/// "-...-+" rule closes the rectangle block from below. The empty copartition
/// renders as an empty string.
[[nodiscard]] std::string render_ascii(const Copartition& c, LabelStyle style = LabelStyle::Numeric);

/// Plain SVG cell grid with text labels and the boundary drawn as a polyline.
[[nodiscard]] std::string render_svg(const Copartition& c, LabelStyle style = LabelStyle::Numeric);

} // namespace copa
