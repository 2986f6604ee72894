#include "equicones/chart.hpp"

#include <algorithm>
#include <sstream>

namespace equicones {

namespace {

/* glyph priority: digits (multiplicity) > apex > tower > edges > interior */
char cone_glyph(BiDegree rel)
{
    bool pos = rel.p <= 0 && rel.q <= rel.p;
    if (pos) {
        if (rel.p == 0 && rel.q == 0) return 'o';
        if (rel.p == 0) return '|';
        if (rel.q == rel.p) return '\\';
        return '.';
    }
    if (rel.p == 0 && rel.q == 2) return 'o';
    if (rel.p == 0) return '|';
    if (rel.q == rel.p + 2) return '\\';
    return '.';
}

char merge(char a, char b)
{
    auto rank = [](char c) {
        switch (c) {
            case 'o': return 5;
            case '#': return 4;
            case '\\': return 3;
            case '|': return 2;
            case '.': return 1;
            default: return 0;
        }
    };
    return rank(a) >= rank(b) ? a : b;
}

}  // namespace

std::string ascii_chart(const GradedModule& m, Region region, const std::vector<ChartArrow>& arrows)
{
    int width = region.p_max - region.p_min + 1;
    int height = region.q_max - region.q_min + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(height),
                                  std::string(static_cast<std::size_t>(width), ' '));
    std::vector<std::vector<int>> count(static_cast<std::size_t>(height),
                                        std::vector<int>(static_cast<std::size_t>(width), 0));
    auto cell = [&](BiDegree d) -> std::pair<int, int> {
        return {region.q_max - d.q, d.p - region.p_min};
    };
    for (const auto& s : m.summands) {
        region.for_each([&](BiDegree d) {
            if (s.dim_at(d) == 0) return;
            auto [row, col] = cell(d);
            auto r = static_cast<std::size_t>(row);
            auto c = static_cast<std::size_t>(col);
            ++count[r][c];
            char g = s.kind == Summand::InducedTower ? '#' : cone_glyph(d - s.shift);
            grid[r][c] = merge(grid[r][c], g);
        });
    }
    /* multiplicity wins over glyph */
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c)
            if (count[r][c] > 1) grid[r][c] = count[r][c] < 10 ? static_cast<char>('0' + count[r][c]) : '+';

    std::ostringstream out;
    for (int q = region.q_max; q >= region.q_min; --q) {
        out.width(4);
        out << q;
        out << " |";
        for (char c : grid[static_cast<std::size_t>(region.q_max - q)])
            if (c == '#')
                out << "‖";  /* tower */
            else
                out << c;
        out << "\n";
    }
    out << "     +" << std::string(static_cast<std::size_t>(width), '-') << "\n      ";
    for (int p = region.p_min; p <= region.p_max; ++p)
        out << (p == 0 ? '0' : (p % 5 == 0 ? (p > 0 ? '+' : '-') : ' '));
    out << "\n";
    out << "p: " << region.p_min << ".." << region.p_max << "  q: " << region.q_min << ".."
        << region.q_max << "\n";
    for (const auto& a : arrows)
        out << "d: " << a.label << " " << to_string(a.from) << " -> " << to_string(a.to) << "\n";
    return out.str();
}

std::string svg_chart(const GradedModule& m, Region region, const std::string& source_json,
                      const std::vector<ChartArrow>& arrows)
{
    const int cell = 24, margin = 48;
    int width = (region.p_max - region.p_min + 1) * cell + 2 * margin;
    int height = (region.q_max - region.q_min + 1) * cell + 2 * margin;
    auto X = [&](double p) { return margin + (p - region.p_min) * cell + cell / 2.0; };
    auto Y = [&](double q) { return height - margin - (q - region.q_min) * cell - cell / 2.0; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<metadata id=\"equicones-source\"><![CDATA[" << source_json << "]]></metadata>\n";
    /* axes */
    out << "<line x1=\"" << X(region.p_min) - cell << "\" y1=\"" << Y(0) << "\" x2=\""
        << X(region.p_max) + cell << "\" y2=\"" << Y(0) << "\" stroke=\"gray\"/>\n";
    out << "<line x1=\"" << X(0) << "\" y1=\"" << Y(region.q_min) + cell << "\" x2=\"" << X(0)
        << "\" y2=\"" << Y(region.q_max) - cell << "\" stroke=\"gray\"/>\n";

    auto clip = [&](double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); };
    for (const auto& s : m.summands) {
        if (s.kind == Summand::InducedTower) {
            if (s.p0 < region.p_min || s.p0 > region.p_max) continue;
            out << "<line x1=\"" << X(s.p0) << "\" y1=\"" << Y(region.q_min) << "\" x2=\""
                << X(s.p0) << "\" y2=\"" << Y(region.q_max) << "\" stroke=\"goldenrod\" stroke-width=\"3\"/>";
            out << "<text x=\"" << X(s.p0) + 3 << "\" y=\"" << Y(region.q_min) - 3
                << "\" font-size=\"9\">" << s.label << "</text>\n";
            continue;
        }
        BiDegree a = s.shift;  /* positive apex; negative apex at a + (0,2) */
        double reach_down = clip(static_cast<double>(a.q - region.q_min), 0.0, 1e4);
        double reach_up = clip(static_cast<double>(region.q_max - (a.q + 2)), 0.0, 1e4);
        if (region.contains(a) || a.q > region.q_min) {
            out << "<line x1=\"" << X(a.p) << "\" y1=\"" << Y(a.q) << "\" x2=\"" << X(a.p)
                << "\" y2=\"" << Y(a.q - reach_down) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>";
            out << "<line x1=\"" << X(a.p) << "\" y1=\"" << Y(a.q) << "\" x2=\""
                << X(a.p - reach_down) << "\" y2=\"" << Y(a.q - reach_down)
                << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
        }
        out << "<line x1=\"" << X(a.p) << "\" y1=\"" << Y(a.q + 2) << "\" x2=\"" << X(a.p)
            << "\" y2=\"" << Y(a.q + 2 + reach_up) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>";
        out << "<line x1=\"" << X(a.p) << "\" y1=\"" << Y(a.q + 2) << "\" x2=\""
            << X(a.p + reach_up) << "\" y2=\"" << Y(a.q + 2 + reach_up)
            << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << X(a.p) + 3 << "\" y=\"" << Y(a.q) + 12 << "\" font-size=\"9\">"
            << s.label << "</text>\n";
    }
    for (const auto& a : arrows) {
        out << "<line x1=\"" << X(a.from.p) << "\" y1=\"" << Y(a.from.q) << "\" x2=\"" << X(a.to.p)
            << "\" y2=\"" << Y(a.to.q) << "\" stroke=\"green\" stroke-width=\"1.5\"/>";
        out << "<text x=\"" << (X(a.from.p) + X(a.to.p)) / 2 << "\" y=\""
            << (Y(a.from.q) + Y(a.to.q)) / 2 - 3 << "\" font-size=\"8\" fill=\"green\">" << a.label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_embedded_json(const std::string& svg)
{
    const std::string open = "<metadata id=\"equicones-source\"><![CDATA[";
    const std::string close = "]]></metadata>";
    auto a = svg.find(open);
    if (a == std::string::npos) return {};
    a += open.size();
    auto b = svg.find(close, a);
    if (b == std::string::npos) return {};
    return svg.substr(a, b - a);
}

GradedModule page_module(const Page& page)
{
    GradedModule m;
    for (const auto& [t, summands] : page.filtrations) {
        (void)t;
        for (const auto& s : summands) m.add(s.summand);
    }
    return m;
}

std::vector<ChartArrow> page_arrows(const Page& page)
{
    std::vector<ChartArrow> out;
    for (const auto& d : page.diffs) {
        if (d.kind == SummandMap::ConeTowerZeroed) continue;
        const auto& from = page.at(d.from).summand;
        const auto& to = page.at(d.to).summand;
        BiDegree a = from.kind == Summand::FreeCone ? from.shift : BiDegree{from.p0, 0};
        BiDegree b = to.kind == Summand::FreeCone ? to.shift : BiDegree{to.p0, 0};
        out.push_back({a, b, "d1 " + from.label + "->" + to.label});
    }
    return out;
}

}  // namespace equicones
