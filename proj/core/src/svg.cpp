#include "linkgrp/svg.hpp"

#include <sstream>

namespace linkgrp {

namespace {

constexpr int kCell = 60;
constexpr int kPad = 40;

std::string render(const LatticeComplex& complex, const LatticePath* base) {
    int min_x = complex.min_x(), max_x = complex.max_x();
    int min_y = complex.min_y(), max_y = complex.max_y();
    int w = (max_x - min_x) * kCell + 2 * kPad;
    int h = (max_y - min_y) * kCell + 2 * kPad;
    auto px = [&](int x) { return kPad + (x - min_x) * kCell; };
    auto py = [&](int y) { return h - kPad - (y - min_y) * kCell; };

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    for (const Point& s : complex.squares())
        out << "  <rect x='" << px(s.x) << "' y='" << py(s.y + 1) << "' width='" << kCell
            << "' height='" << kCell << "' fill='#f3e7c9' stroke='none'/>\n";
    for (int x = min_x; x <= max_x; ++x)
        for (int y = min_y; y <= max_y; ++y) {
            Point a{x, y};
            for (Point b : {Point{x + 1, y}, Point{x, y + 1}}) {
                auto l = complex.label(a, b);
                if (!l) continue;
                out << "  <line x1='" << px(a.x) << "' y1='" << py(a.y) << "' x2='" << px(b.x)
                    << "' y2='" << py(b.y) << "' stroke='#333' stroke-width='1.5'/>\n";
                int tx = (px(a.x) + px(b.x)) / 2, ty = (py(a.y) + py(b.y)) / 2;
                out << "  <text x='" << tx + 4 << "' y='" << ty - 4
                    << "' font-size='11' fill='#555'>" << letter_to_string(*l) << "</text>\n";
            }
        }
    if (base) {
        out << "  <polyline fill='none' stroke='#b03030' stroke-width='3' points='";
        for (const Point& v : base->vertices) out << px(v.x) << "," << py(v.y) << " ";
        out << "'/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string tiling_to_svg(const SquareTiling& t) { return render(t.complex, &t.base_path); }

std::string strip_to_svg(const ConjugacyStrip& s) {
    return render(s.tiling.complex, &s.tiling.base_path);
}

}  // namespace linkgrp
