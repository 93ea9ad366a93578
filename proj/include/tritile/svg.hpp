#pragma once

#include <sstream>
#include <string>

#include "tritile/document.hpp"

namespace tritile {

// Deterministic SVG rendering: every coordinate goes through qs3_approx
// with the requested digits, the y-axis is flipped into screen
// coordinates, and fixed inputs produce byte-identical output.
inline std::string render_svg(const TilingDocument& doc, int digits = 9) {
    const Tiling& t = doc.tiling;
    QS3 min_x, max_x, min_y, max_y;
    bool first = true;
    auto grow = [&](const Point& p) {
        if (first) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            first = false;
            return;
        }
        if (qs3_less(p.x, min_x)) min_x = p.x;
        if (qs3_less(max_x, p.x)) max_x = p.x;
        if (qs3_less(p.y, min_y)) min_y = p.y;
        if (qs3_less(max_y, p.y)) max_y = p.y;
    };
    for (const Point& p : t.target.vertices()) grow(p);
    for (const Placement& pl : t.placements) {
        Triangle f = pl.footprint(t.shape);
        grow(f.v0);
        grow(f.v1);
        grow(f.v2);
    }
    // flipped y: y' = max_y - y, so the figure sits in [0, h]
    auto fx = [&](const QS3& x) { return qs3_approx(x - min_x, digits); };
    auto fy = [&](const QS3& y) { return qs3_approx(max_y - y, digits); };
    std::string w = qs3_approx(max_x - min_x, digits);
    std::string h = qs3_approx(max_y - min_y, digits);

    static const char* fills[6] = {"#d9e7f5", "#f5e3d9", "#e2f0d9",
                                   "#f0e6f5", "#f5f0d0", "#dff0ee"};
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- tritile tile=" << t.shape.str() << " variant=" << variant_name(t.shape.variant)
        << " N=" << t.claimed_count << " format_version=" << TilingDocument::kFormatVersion;
    if (!doc.meta.empty()) out << " " << doc.meta;
    out << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << w << " "
        << h << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
    for (std::size_t i = 0; i < t.placements.size(); ++i) {
        Triangle f = t.placements[i].footprint(t.shape);
        out << "  <polygon points=\"" << fx(f.v0.x) << "," << fy(f.v0.y) << " " << fx(f.v1.x)
            << "," << fy(f.v1.y) << " " << fx(f.v2.x) << "," << fy(f.v2.y) << "\" fill=\""
            << fills[i % 6] << "\" stroke=\"#555555\" stroke-width=\"0.05\"/>\n";
    }
    out << "  <polygon points=\"";
    const auto& tv = t.target.vertices();
    for (std::size_t i = 0; i < tv.size(); ++i) {
        if (i) out << " ";
        out << fx(tv[i].x) << "," << fy(tv[i].y);
    }
    out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.12\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tritile
