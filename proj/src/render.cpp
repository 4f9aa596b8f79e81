#include "wavegraph/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace wavegraph {

namespace {

constexpr int kSpacing = 40;
constexpr int kMargin = 40;

constexpr std::array<const char*, 6> kPageColors = {
    "#000000", "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400"};

int vertex_x(int v) { return kMargin + (v - 1) * kSpacing; }

}  // namespace

std::string render_svg(const WaveGraph& g) {
    const Validation v = validate(g);
    if (!v.ok) throw InvalidInput("invalid wave graph: " + v.message);

    const int max_rx = g.m > 1 ? (g.m - 1) * kSpacing / 2 : 0;
    const int width = 2 * kMargin + (g.m > 0 ? (g.m - 1) * kSpacing : 0);
    const int height = 2 * (max_rx + kMargin);
    const int base_y = height / 2;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";

    const bool split_pages = (g.n == 3);
    for (int page = 1; page < g.n; ++page) {
        auto edges = page_edges(g, page);
        std::sort(edges.begin(), edges.end());
        const bool above = !split_pages || page == 1;
        const char* color = split_pages ? kPageColors[0] : kPageColors[(page - 1) % kPageColors.size()];
        for (auto [a, b] : edges) {
            const int x1 = vertex_x(a);
            const int x2 = vertex_x(b);
            const int rx = (x2 - x1) / 2;
            // page separation: higher pages get taller arcs when stacked
            double ry = rx;
            if (!split_pages && g.n > 2)
                ry = rx * (0.35 + 0.65 * page / (g.n - 1));
            char ry_buf[32];
            std::snprintf(ry_buf, sizeof ry_buf, "%.2f", ry);
            svg << "  <path d=\"M " << x1 << ',' << base_y << " A " << rx << ','
                << ry_buf << " 0 0," << (above ? 1 : 0) << ' ' << x2 << ','
                << base_y << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"2\" data-page=\"" << page << "\" data-edge=\""
                << a << '-' << b << "\"/>\n";
        }
    }

    for (int vtx = 1; vtx <= g.m; ++vtx) {
        svg << "  <circle cx=\"" << vertex_x(vtx) << "\" cy=\"" << base_y
            << "\" r=\"3\" fill=\"#000000\"/>\n";
        svg << "  <text x=\"" << vertex_x(vtx) << "\" y=\"" << base_y + 18
            << "\" font-size=\"12\" text-anchor=\"middle\">" << vtx << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace wavegraph
