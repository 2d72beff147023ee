#pragma once

#include "ballhull/io.hpp"

#include <cstdio>
#include <sstream>

namespace ballhull {

struct SvgStyle {
    double width_px = 640.0;
    double margin = 0.05;          ///< fraction of the drawing's extent added on each side
    std::vector<double> levels;    ///< contour levels for grid functions
    double region_h = 0.0;         ///< contour spacing for sampled regions (0: extent / 400)
    bool show_generators = true;
};

namespace svg_detail {

inline std::string fmt(double v)
{
    if (std::abs(v) < 1e-12) v = 0.0; // round-off and "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline const char* color(std::size_t i)
{
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"};
    return palette[i % 7];
}

struct Segment {
    double x0, y0, x1, y1;
};

/// Level-`level` crossings of a 2D lattice function: one segment per cell
/// crossing, saddles split by the cell-center average.
template <typename ValueAt>
std::vector<Segment> marching_squares(const Lattice& L, ValueAt&& value, double level)
{
    std::vector<Segment> out;
    const std::size_t nx = L.counts[0], ny = L.counts[1];
    if (nx < 2 || ny < 2) return out;
    auto above = [&](double v) { return v >= level; };
    for (std::size_t i = 0; i + 1 < nx; ++i) {
        for (std::size_t j = 0; j + 1 < ny; ++j) {
            const double x0 = L.lo[0] + L.h * static_cast<double>(i), y0 = L.lo[1] + L.h * static_cast<double>(j);
            const double x1 = x0 + L.h, y1 = y0 + L.h;
            // corners a, b, c, d counter-clockwise from (x0, y0)
            const double v[4] = {value(i, j), value(i + 1, j), value(i + 1, j + 1), value(i, j + 1)};
            const double px[4] = {x0, x1, x1, x0}, py[4] = {y0, y0, y1, y1};
            int mask = 0;
            for (int k = 0; k < 4; ++k) mask |= above(v[k]) ? (1 << k) : 0;
            if (mask == 0 || mask == 15) continue;
            double ex[4], ey[4];
            bool cut[4];
            for (int e = 0; e < 4; ++e) {
                const int a = e, b = (e + 1) % 4;
                cut[e] = above(v[a]) != above(v[b]);
                if (!cut[e]) continue;
                double t = 0.5;
                if (!is_inf_sentinel(v[a]) && !is_inf_sentinel(v[b])) t = (level - v[a]) / (v[b] - v[a]);
                ex[e] = px[a] + t * (px[b] - px[a]);
                ey[e] = py[a] + t * (py[b] - py[a]);
            }
            auto seg = [&](int e, int f) { out.push_back({ex[e], ey[e], ex[f], ey[f]}); };
            if (mask == 5 || mask == 10) {
                double center = 0.0;
                for (double x : v) center += is_inf_sentinel(x) ? kInfSentinel * 0.25 : 0.25 * x;
                if (above(center) == above(v[0])) {
                    seg(0, 1);
                    seg(2, 3);
                } else {
                    seg(3, 0);
                    seg(1, 2);
                }
                continue;
            }
            int first = -1;
            for (int e = 0; e < 4; ++e) {
                if (!cut[e]) continue;
                if (first < 0) first = e;
                else seg(first, e);
            }
        }
    }
    return out;
}

} // namespace svg_detail

/// Accumulates 2D drawing elements in world coordinates and writes an SVG
/// document with y pointing up. Output bytes depend only on the inputs.
class SvgCanvas {
public:
    explicit SvgCanvas(SvgStyle style = {}) : style_(std::move(style)) {}

    void add_points(const PointSet& pts, const std::string& label = "points")
    {
        require2(pts.dim(), "points");
        std::ostringstream s;
        s << "<g class=\"" << label << "\" fill=\"" << next_color() << "\" stroke=\"none\">\n";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            extend(pts[i][0], pts[i][1]);
            s << "<circle cx=\"" << svg_detail::fmt(pts[i][0]) << "\" cy=\"" << svg_detail::fmt(-pts[i][1])
              << "\" r=\"@DOT@\"/>\n";
        }
        s << "</g>\n";
        body_ << s.str();
    }

    void add_circle(VecView c, double r, const std::string& label = "ball")
    {
        extend(c[0] - r, c[1] - r);
        extend(c[0] + r, c[1] + r);
        body_ << "<circle class=\"" << label << "\" cx=\"" << svg_detail::fmt(c[0]) << "\" cy=\"" << svg_detail::fmt(-c[1])
              << "\" r=\"" << svg_detail::fmt(r) << "\" stroke=\"" << next_color() << "\"/>\n";
    }

    /// Boundary as a closed path of elliptical-arc segments.
    void add_arc_region(const ArcRegion& A, const std::string& label = "region")
    {
        if (A.is_empty()) {
            body_ << "<!-- " << label << ": empty -->\n";
            return;
        }
        if (A.kind() == ArcRegionKind::point) {
            const Vec& p = A.vertices().front().point;
            PointSet s(2);
            s.push_back(p);
            add_points(s, label);
            return;
        }
        const Box b = A.bounding_box();
        extend(b.lo[0], b.lo[1]);
        extend(b.hi[0], b.hi[1]);
        const std::string R = svg_detail::fmt(A.radius());
        std::ostringstream d;
        auto put = [&](const Vec& p) { d << svg_detail::fmt(p[0]) << ' ' << svg_detail::fmt(-p[1]); };
        if (A.full_disk()) {
            // a full circle needs two arc commands
            const Arc& a = A.arcs().front();
            d << "M ";
            put(a.point_at(0.0));
            d << " A " << R << ' ' << R << " 0 1 0 ";
            put(a.point_at(std::numbers::pi));
            d << " A " << R << ' ' << R << " 0 1 0 ";
            put(a.point_at(0.0));
            d << " Z";
        } else {
            d << "M ";
            put(A.arcs().front().point_at(A.arcs().front().start_angle));
            for (const Arc& a : A.arcs()) {
                // counter-clockwise in world coordinates is sweep-flag 0 once y is flipped
                d << " A " << R << ' ' << R << " 0 " << (a.sweep() > std::numbers::pi ? 1 : 0) << " 0 ";
                put(a.point_at(a.end_angle));
            }
            d << " Z";
        }
        body_ << "<path class=\"" << label << "\" stroke=\"" << next_color() << "\" d=\"" << d.str() << "\"/>\n";
    }

    /// Level curves of a 2D grid function.
    void add_contours(const GridFunction& f, const std::vector<double>& levels, const std::string& label = "levels")
    {
        require2(f.dim(), "grid function");
        const Lattice& L = f.lattice();
        extend(f.box().lo[0], f.box().lo[1]);
        extend(f.box().hi[0], f.box().hi[1]);
        for (double level : levels) {
            const auto segs = svg_detail::marching_squares(
                L, [&](std::size_t i, std::size_t j) { return f.value(i * L.counts[1] + j); }, level);
            add_segments(segs, label, level);
        }
    }

    /// Zero level curve of `level` over box, sampled at spacing h.
    template <typename Level>
    void add_level_set(const Box& box, double h, Level&& level, const std::string& label = "region")
    {
        const Lattice L = Lattice::covering(box, h);
        std::vector<double> v(L.size());
        parallel_for(L.size(), [&](std::size_t i) {
            double p[8];
            L.node(i, p);
            v[i] = level(VecView(p, 2));
        });
        extend(box.lo[0], box.lo[1]);
        extend(box.hi[0], box.hi[1]);
        add_segments(svg_detail::marching_squares(
                         L, [&](std::size_t i, std::size_t j) { return v[i * L.counts[1] + j]; }, 0.0),
                     label, 0.0);
    }

    std::string document() const
    {
        double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
        if (any_) {
            x0 = lo_[0], y0 = lo_[1], x1 = hi_[0], y1 = hi_[1];
        }
        double w = x1 - x0, h = y1 - y0;
        const double pad = style_.margin * std::max({w, h, 1e-9});
        x0 -= pad, y0 -= pad, w += 2 * pad, h += 2 * pad;
        const double height_px = style_.width_px * h / w;
        std::string body = body_.str();
        const std::string dot = svg_detail::fmt(0.006 * std::max(w, h));
        for (std::size_t at = body.find("@DOT@"); at != std::string::npos; at = body.find("@DOT@", at)) {
            body.replace(at, 5, dot);
        }
        std::ostringstream s;
        s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_detail::fmt(style_.width_px) << "\" height=\""
          << svg_detail::fmt(height_px) << "\" viewBox=\"" << svg_detail::fmt(x0) << ' ' << svg_detail::fmt(-(y0 + h))
          << ' ' << svg_detail::fmt(w) << ' ' << svg_detail::fmt(h) << "\">\n"
          << "<g fill=\"none\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\">\n"
          << body << "</g>\n</svg>\n";
        return s.str();
    }

private:
    static void require2(std::size_t dim, const char* what)
    {
        if (dim != 2) throw Unsupported(detail::concat("render_svg: ", what, " has dimension ", dim, "; only 2 is drawn"));
    }

    void add_segments(const std::vector<svg_detail::Segment>& segs, const std::string& label, double level)
    {
        std::ostringstream d;
        for (const auto& s : segs) {
            d << "M " << svg_detail::fmt(s.x0) << ' ' << svg_detail::fmt(-s.y0) << " L " << svg_detail::fmt(s.x1) << ' '
              << svg_detail::fmt(-s.y1) << ' ';
        }
        std::string path = d.str();
        if (!path.empty()) path.pop_back();
        body_ << "<path class=\"" << label << "\" data-level=\"" << svg_detail::fmt(level) << "\" stroke=\""
              << next_color() << "\" d=\"" << path << "\"/>\n";
    }

    void extend(double x, double y)
    {
        if (!any_) {
            lo_ = {x, y};
            hi_ = {x, y};
            any_ = true;
            return;
        }
        lo_[0] = std::min(lo_[0], x), lo_[1] = std::min(lo_[1], y);
        hi_[0] = std::max(hi_[0], x), hi_[1] = std::max(hi_[1], y);
    }

    const char* next_color() { return svg_detail::color(colors_++); }

    SvgStyle style_;
    std::ostringstream body_;
    bool any_ = false;
    std::array<double, 2> lo_{}, hi_{};
    std::size_t colors_ = 0;
};

/// Draws a set oracle: exact regions as arcs, finite sets as dots, balls as
/// circles (Euclidean) and everything else as its sampled zero level curve.
inline void draw_set(SvgCanvas& canvas, const SetOracle& S, const SvgStyle& style, const std::string& label = "region")
{
    if (S.dim() != 2) throw Unsupported(detail::concat("render_svg: dimension ", S.dim(), "; only 2 is drawn"));
    const auto& rep = S.rep();
    if (const ArcRegion* a = S.exact2d()) {
        canvas.add_arc_region(*a, label);
        if (const auto* B = std::get_if<BallRegion>(&rep); B && style.show_generators) canvas.add_points(B->generators(), "generators");
        return;
    }
    if (std::holds_alternative<EmptySet>(rep)) return;
    if (S.is_whole_space()) throw Unsupported("render_svg: the whole space cannot be drawn");
    if (const auto* C = std::get_if<PointSet>(&rep)) {
        canvas.add_points(*C, label);
        return;
    }
    if (const auto* B = std::get_if<Ball>(&rep); B && S.norm().is_euclidean()) {
        canvas.add_circle(B->center, B->radius, label);
        return;
    }
    const Box box = S.bounding_box();
    if (box.empty()) return;
    const double h = style.region_h > 0.0 ? style.region_h : std::max(box.diameter(), 1e-9) / 400.0;
    const Box around = box.expanded(2.0 * h);
    if (const auto* B = std::get_if<BallRegion>(&rep)) {
        canvas.add_level_set(around, h, [&](VecView y) { return B->level(y); }, label);
        if (style.show_generators) canvas.add_points(B->generators(), "generators");
    } else if (const auto* b = std::get_if<Ball>(&rep)) {
        canvas.add_level_set(around, h, [&](VecView y) { return S.norm().distance(y, b->center) - b->radius; }, label);
    } else {
        canvas.add_level_set(around, h, [&](VecView y) { return S.contains(y, 0.0) ? -1.0 : 1.0; }, label);
    }
}

inline std::string render_svg(const Scene& scene, const SvgStyle& style = {})
{
    if (scene.dim() != 2) throw Unsupported(detail::concat("render_svg: scene dimension ", scene.dim(), "; only 2 is drawn"));
    SvgCanvas canvas(style);
    for (std::size_t i = 0; i < scene.sets.size(); ++i) {
        draw_set(canvas, to_oracle(scene.sets[i], scene.norm), style, detail::concat("set", i));
    }
    for (const auto& path : scene.functions) {
        const GridFunction f = load_grid_function(path);
        canvas.add_contours(f, style.levels, "levels");
    }
    return canvas.document();
}

inline std::string render_svg(const SetOracle& region, const SvgStyle& style = {})
{
    SvgCanvas canvas(style);
    draw_set(canvas, region, style);
    return canvas.document();
}

inline std::string render_svg(const GridFunction& f, const SvgStyle& style = {})
{
    SvgCanvas canvas(style);
    canvas.add_contours(f, style.levels);
    return canvas.document();
}

} // namespace ballhull
