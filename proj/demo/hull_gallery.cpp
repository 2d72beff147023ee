// Strongly convex hulls of a few point sets, as SVG files in the working directory.

#include "ballhull/ballhull.hpp"

#include <iostream>

using namespace ballhull;

int main()
{
    const NormSpec l2 = NormSpec::euclidean(2);
    const std::vector<std::pair<std::string, PointSet>> shapes{
        {"lens", PointSet({{0, 0}, {1, 0}})},
        {"square", PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}})},
        {"triangle", PointSet({{0, 0}, {1, 0}, {0.5, 0.866025403784}})},
    };
    for (const auto& [name, C] : shapes) {
        for (double R : {1.0, 2.0}) {
            const HullResult H = strong_hull(C, R, l2, HullBackend::exact2d);
            SvgCanvas canvas;
            SvgStyle style;
            draw_set(canvas, H.oracle(), style, "hull");
            draw_set(canvas, SetOracle(*H.polar_arcs, l2), style, "polar");
            canvas.add_points(C, "input");
            const std::string file = detail::concat(name, "_R", R, ".svg");
            write_text_file(file, canvas.document());
            std::cout << file << ": hull diameter " << H.hull_arcs->diameter() << ", polar diameter "
                      << H.polar_arcs->diameter() << "\n";
        }
    }
}
