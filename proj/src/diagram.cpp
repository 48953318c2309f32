#include "copa/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace copa {

namespace {

std::string join_cells(const std::vector<std::string>& cells, std::size_t width) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ' ';
        out += cells[i];
        out.append(width - cells[i].size(), ' ');
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string Diagram::label(CellKind kind, LabelStyle style) const {
    switch (kind) {
    case CellKind::Ground:
        return (style == LabelStyle::Symbolic && params.a != 0) ? "a" : std::to_string(params.a);
    case CellKind::Sky:
        return (style == LabelStyle::Symbolic && params.b != 0) ? "b" : std::to_string(params.b);
    case CellKind::Modulus:
        return style == LabelStyle::Symbolic ? "m" : std::to_string(params.m);
    }
    return "?";
}

std::vector<std::vector<std::string>> Diagram::labels(LabelStyle style) const {
    std::vector<std::vector<std::string>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        auto& labelled = out.emplace_back();
        for (CellKind kind : row) labelled.push_back(label(kind, style));
    }
    return out;
}

std::vector<std::size_t> Diagram::shape() const {
    std::vector<std::size_t> out;
    for (const auto& row : rows) out.push_back(row.size());
    return out;
}

Diagram make_diagram(const Copartition& c) {
    const auto& params = c.params();
    Diagram d;
    d.params = params;
    d.rectangle_rows = c.sky_parts();
    d.rectangle_columns = c.ground_parts();
    for (Part part : c.sky().parts()) {
        auto& row = d.rows.emplace_back(d.rectangle_columns, CellKind::Modulus);
        row.push_back(CellKind::Sky);
        row.insert(row.end(), static_cast<std::size_t>((part - params.b) / params.m), CellKind::Modulus);
    }
    if (d.rectangle_columns > 0) {
        d.rows.emplace_back(d.rectangle_columns, CellKind::Ground);
        for (int level = 1;; ++level) {
            std::size_t reach = 0;
            for (Part part : c.ground().parts()) {
                if ((part - params.a) / params.m >= level) ++reach;
            }
            if (reach == 0) break;
            d.rows.emplace_back(reach, CellKind::Modulus);
        }
    }
    return d;
}

Copartition copartition_from_diagram(const Diagram& d) {
    const auto& params = d.params;
    const std::size_t w = d.rectangle_columns;
    const std::size_t s = d.rectangle_rows;
    if (d.rows.size() < s) throw std::invalid_argument("diagram has fewer rows than its rectangle");
    std::vector<Part> sky;
    for (std::size_t i = 0; i < s; ++i) {
        if (d.rows[i].size() < w + 1) throw std::invalid_argument("sky row shorter than the rectangle");
        sky.push_back(params.b + params.m * static_cast<Part>(d.rows[i].size() - w - 1));
    }
    std::vector<Part> ground(w, params.a);
    if (w > 0) {
        if (d.rows.size() <= s || d.rows[s].size() != w) {
            throw std::invalid_argument("diagram is missing its row of ground cells");
        }
        for (std::size_t r = s + 1; r < d.rows.size(); ++r) {
            if (d.rows[r].size() > w) throw std::invalid_argument("ground row wider than the rectangle");
            for (std::size_t j = 0; j < d.rows[r].size(); ++j) ground[j] += params.m;
        }
    } else if (d.rows.size() != s) {
        throw std::invalid_argument("diagram has ground rows but no ground columns");
    }
    return make_copartition(params, Partition::with_zeros(std::move(ground)), Partition::with_zeros(std::move(sky)));
}

std::string render_ascii(const Copartition& c, LabelStyle style) {
    if (c.empty()) return {};
    const Diagram d = make_diagram(c);
    const auto labels = d.labels(style);
    std::size_t width = 1;
    for (const auto& row : labels) {
        for (const auto& l : row) width = std::max(width, l.size());
    }

    const std::size_t w = d.rectangle_columns;
    std::ostringstream out;
    for (std::size_t i = 0; i < d.rectangle_rows; ++i) {
        const auto& row = labels[i];
        std::vector<std::string> rect(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(w));
        std::vector<std::string> rest(row.begin() + static_cast<std::ptrdiff_t>(w), row.end());
        std::string line = join_cells(rect, width);
        if (w > 0) line += ' ';
        line += "| " + join_cells(rest, width);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    if (w > 0) {
        const std::size_t rule = w * width + (w - 1) + 1;
        out << std::string(rule, '-') << "+\n";
        for (std::size_t r = d.rectangle_rows; r < labels.size(); ++r) {
            std::string line = join_cells(labels[r], width);
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << line << '\n';
        }
    }
    return out.str();
}

std::string render_svg(const Copartition& c, LabelStyle style) {
    constexpr int cell = 32;
    constexpr int margin = 8;
    const Diagram d = make_diagram(c);
    const auto labels = d.labels(style);
    std::size_t columns = 0;
    for (const auto& row : labels) columns = std::max(columns, row.size());
    const int width = static_cast<int>(columns) * cell + 2 * margin;
    const int height = static_cast<int>(labels.size()) * cell + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (std::size_t r = 0; r < labels.size(); ++r) {
        for (std::size_t col = 0; col < labels[r].size(); ++col) {
            const int x = margin + static_cast<int>(col) * cell;
            const int y = margin + static_cast<int>(r) * cell;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
                << "\" fill=\"white\" stroke=\"black\"/>\n";
            out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2
                << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"monospace\">"
                << xml_escape(labels[r][col]) << "</text>\n";
        }
    }
    if (!d.empty()) {
        const int bx = margin + static_cast<int>(d.rectangle_columns) * cell;
        const int by = margin + static_cast<int>(d.rectangle_rows) * cell;
        out << "  <polyline points=\"" << margin << ',' << by << ' ' << bx << ',' << by << ' ' << bx << ','
            << margin << "\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace copa
