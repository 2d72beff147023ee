#pragma once

#include "ballhull/geometry2d.hpp"
#include "ballhull/sets.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

namespace ballhull {

/// Circular arc of the boundary, traversed counter-clockwise from
/// start_angle to end_angle = start_angle + sweep (radians).
struct Arc {
    Vec center;
    double radius = 0.0;
    double start_angle = 0.0;
    double end_angle = 0.0;

    double sweep() const { return end_angle - start_angle; }

    Vec point_at(double angle) const
    {
        return {center[0] + radius * std::cos(angle), center[1] + radius * std::sin(angle)};
    }

    /// True when `angle` lies on the arc, allowing `eps` radians of slack at
    /// either end.
    bool covers(double angle, double eps = 1e-12) const
    {
        const double rel = geo2::wrap_2pi(angle - start_angle);
        const double sw = sweep();
        return rel <= sw + eps || rel >= 2.0 * std::numbers::pi - eps;
    }
};

struct ArcVertex {
    Vec point;
    std::size_t arc_in = 0;  ///< arc ending at this vertex
    std::size_t arc_out = 0; ///< arc starting at this vertex
};

enum class ArcRegionKind { empty, point, full_disk, arcs };

/// Exact boundary of an intersection of equal-radius Euclidean disks in the
/// plane: counter-clockwise arcs separated by vertices. The region equals the
/// intersection of the disks of its arcs.
///
/// Degenerate shapes: `point` (one vertex, no arcs) and `full_disk` (one arc
/// spanning 2 pi, no vertices).
class ArcRegion {
public:
    ArcRegion() = default;

    static ArcRegion empty(double radius)
    {
        ArcRegion r;
        r.kind_ = ArcRegionKind::empty;
        r.radius_ = radius;
        return r;
    }

    static ArcRegion point(Vec p, double radius)
    {
        ArcRegion r;
        r.kind_ = ArcRegionKind::point;
        r.radius_ = radius;
        r.vertices_.push_back({std::move(p), 0, 0});
        return r;
    }

    static ArcRegion disk(Vec center, double radius)
    {
        ArcRegion r;
        r.kind_ = ArcRegionKind::full_disk;
        r.radius_ = radius;
        r.arcs_.push_back({std::move(center), radius, 0.0, 2.0 * std::numbers::pi});
        return r;
    }

    /// Builds the region from arc centers in boundary order and the vertex
    /// between arc i and arc i+1 (cyclically).
    static ArcRegion from_cycle(const std::vector<geo2::P2>& centers, const std::vector<geo2::P2>& vertex_after,
                                double radius)
    {
        const std::size_t k = centers.size();
        ArcRegion r;
        r.kind_ = ArcRegionKind::arcs;
        r.radius_ = radius;
        r.arcs_.reserve(k);
        r.vertices_.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const geo2::P2 c = centers[i];
            const geo2::P2 from = vertex_after[(i + k - 1) % k];
            const geo2::P2 to = vertex_after[i];
            const double start = geo2::angle_of(from - c);
            // Every arc of an intersection of two or more equal disks spans less than pi.
            double sweep = geo2::wrap_pi(geo2::angle_of(to - c) - start);
            if (sweep < 0.0) sweep = 0.0;
            r.arcs_.push_back({geo2::to_vec(c), radius, start, start + sweep});
        }
        for (std::size_t i = 0; i < k; ++i) {
            r.vertices_.push_back({geo2::to_vec(vertex_after[i]), i, (i + 1) % k});
        }
        return r;
    }

    ArcRegionKind kind() const { return kind_; }
    bool is_empty() const { return kind_ == ArcRegionKind::empty; }
    bool full_disk() const { return kind_ == ArcRegionKind::full_disk; }
    double radius() const { return radius_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<ArcVertex>& vertices() const { return vertices_; }

    /// Centers of the boundary arcs, in boundary order.
    PointSet arc_centers() const
    {
        PointSet s(2);
        for (const Arc& a : arcs_) s.push_back(a.center);
        return s;
    }

    PointSet vertex_points() const
    {
        PointSet s(2);
        for (const ArcVertex& v : vertices_) s.push_back(v.point);
        return s;
    }

    /// max over arcs of ||y - center|| - radius; <= 0 exactly on the region.
    double level(VecView y) const
    {
        switch (kind_) {
        case ArcRegionKind::empty: return std::numeric_limits<double>::infinity();
        case ArcRegionKind::point: return euclidean_distance(y, vertices_[0].point);
        default: break;
        }
        double m = -std::numeric_limits<double>::infinity();
        for (const Arc& a : arcs_) m = std::max(m, euclidean_distance(y, a.center) - a.radius);
        return m;
    }

    bool contains(VecView y, double tol = 0.0) const
    {
        detail::require_dim(y, 2, "ArcRegion::contains");
        if (kind_ == ArcRegionKind::empty) return false;
        return level(y) <= tol;
    }

    /// max_{z in region} ||x - z||, attained at a vertex or at the point of an
    /// arc opposite to x through the arc center.
    double farthest(VecView x) const
    {
        detail::require_dim(x, 2, "ArcRegion::farthest");
        switch (kind_) {
        case ArcRegionKind::empty: throw std::domain_error("farthest distance over an empty region");
        case ArcRegionKind::point: return euclidean_distance(x, vertices_[0].point);
        case ArcRegionKind::full_disk: return euclidean_distance(x, arcs_[0].center) + arcs_[0].radius;
        case ArcRegionKind::arcs: break;
        }
        const geo2::P2 p = geo2::to_p2(x);
        double best = 0.0;
        for (const ArcVertex& v : vertices_) best = std::max(best, geo2::dist(p, geo2::to_p2(v.point)));
        for (const Arc& a : arcs_) {
            const geo2::P2 c = geo2::to_p2(a.center);
            const geo2::P2 away = c - p;
            if (away.x == 0.0 && away.y == 0.0) continue; // endpoints suffice
            if (a.covers(geo2::angle_of(away))) best = std::max(best, geo2::norm(away) + a.radius);
        }
        return best;
    }

    /// Distance from x to the boundary curve (inside or outside).
    double boundary_distance(VecView x) const
    {
        detail::require_dim(x, 2, "ArcRegion::boundary_distance");
        switch (kind_) {
        case ArcRegionKind::empty: throw std::domain_error("boundary distance to an empty region");
        case ArcRegionKind::point: return euclidean_distance(x, vertices_[0].point);
        case ArcRegionKind::full_disk: return std::abs(euclidean_distance(x, arcs_[0].center) - arcs_[0].radius);
        case ArcRegionKind::arcs: break;
        }
        const geo2::P2 p = geo2::to_p2(x);
        double best = std::numeric_limits<double>::infinity();
        for (const ArcVertex& v : vertices_) best = std::min(best, geo2::dist(p, geo2::to_p2(v.point)));
        for (const Arc& a : arcs_) {
            const geo2::P2 toward = p - geo2::to_p2(a.center);
            const double len = geo2::norm(toward);
            if (len == 0.0) {
                best = std::min(best, a.radius);
                continue;
            }
            if (a.covers(geo2::angle_of(toward))) best = std::min(best, std::abs(len - a.radius));
        }
        return best;
    }

    /// d(x, region); zero inside.
    double nearest(VecView x) const
    {
        if (contains(x)) return 0.0;
        return boundary_distance(x);
    }

    /// sigma(u) = max_{z in region} <z, u>.
    double support(VecView u) const
    {
        detail::require_dim(u, 2, "ArcRegion::support");
        const geo2::P2 d = geo2::to_p2(u);
        switch (kind_) {
        case ArcRegionKind::empty: throw std::domain_error("support function of an empty region");
        case ArcRegionKind::point: return geo2::dot(geo2::to_p2(vertices_[0].point), d);
        case ArcRegionKind::full_disk: return geo2::dot(geo2::to_p2(arcs_[0].center), d) + arcs_[0].radius * geo2::norm(d);
        case ArcRegionKind::arcs: break;
        }
        double best = -std::numeric_limits<double>::infinity();
        for (const ArcVertex& v : vertices_) best = std::max(best, geo2::dot(geo2::to_p2(v.point), d));
        const double len = geo2::norm(d);
        if (len > 0.0) {
            const double ang = geo2::angle_of(d);
            for (const Arc& a : arcs_) {
                if (a.covers(ang)) best = std::max(best, geo2::dot(geo2::to_p2(a.center), d) + a.radius * len);
            }
        }
        return best;
    }

    /// Vertices plus interior arc points at angular spacing <= theta.
    PointSet boundary_samples(double theta = 2.0 * std::numbers::pi / 720.0) const
    {
        if (!(theta > 0.0)) throw std::invalid_argument("boundary_samples: theta must be > 0");
        PointSet out(2);
        if (kind_ == ArcRegionKind::empty) return out;
        if (kind_ == ArcRegionKind::point) {
            out.push_back(vertices_[0].point);
            return out;
        }
        if (kind_ == ArcRegionKind::full_disk) {
            const Arc& a = arcs_[0];
            const auto n = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(a.sweep() / theta - 1e-12)));
            for (std::size_t j = 0; j < n; ++j) {
                out.push_back(a.point_at(a.start_angle + a.sweep() * static_cast<double>(j) / static_cast<double>(n)));
            }
            return out;
        }
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            const Arc& a = arcs_[i];
            // The arc starts at the vertex shared with the previous arc.
            out.push_back(vertices_[(i + vertices_.size() - 1) % vertices_.size()].point);
            const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(a.sweep() / theta - 1e-12)));
            for (std::size_t j = 1; j < n; ++j) {
                out.push_back(a.point_at(a.start_angle + a.sweep() * static_cast<double>(j) / static_cast<double>(n)));
            }
        }
        return out;
    }

    /// Largest distance between two points of the region.
    double diameter() const
    {
        switch (kind_) {
        case ArcRegionKind::empty: return 0.0;
        case ArcRegionKind::point: return 0.0;
        case ArcRegionKind::full_disk: return 2.0 * arcs_[0].radius;
        case ArcRegionKind::arcs: break;
        }
        const PointSet pts = boundary_samples();
        double best = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) best = std::max(best, farthest(pts[i]));
        return best;
    }

    Box bounding_box() const
    {
        switch (kind_) {
        case ArcRegionKind::empty: return {Vec{1.0, 1.0}, Vec{0.0, 0.0}};
        case ArcRegionKind::point: return {vertices_[0].point, vertices_[0].point};
        default: break;
        }
        Box b{Vec{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
              Vec{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
        auto take = [&b](double x, double y) {
            b.lo[0] = std::min(b.lo[0], x);
            b.lo[1] = std::min(b.lo[1], y);
            b.hi[0] = std::max(b.hi[0], x);
            b.hi[1] = std::max(b.hi[1], y);
        };
        for (const ArcVertex& v : vertices_) take(v.point[0], v.point[1]);
        for (const Arc& a : arcs_) {
            const Vec s = a.point_at(a.start_angle);
            const Vec e = a.point_at(a.end_angle);
            take(s[0], s[1]);
            take(e[0], e[1]);
            for (int q = 0; q < 4; ++q) {
                const double ang = q * std::numbers::pi / 2.0;
                if (a.covers(ang, 0.0)) {
                    const Vec p = a.point_at(ang);
                    take(p[0], p[1]);
                }
            }
        }
        return b;
    }

private:
    ArcRegionKind kind_ = ArcRegionKind::empty;
    double radius_ = 0.0;
    std::vector<Arc> arcs_;
    std::vector<ArcVertex> vertices_;
};

namespace detail {

inline void require_euclidean_plane(const NormSpec& ns, const char* what)
{
    if (!ns.is_euclidean() || ns.dim() != 2) {
        throw Unsupported(concat(what, ": requires the Euclidean norm in dimension 2 (got ", ns.name(), ", dim ",
                                 ns.dim(), ")"));
    }
}

/// Point where the boundary leaves the arc of `a` and enters the arc of `b`
/// when the disks of radius R around a and b are traversed counter-clockwise.
inline geo2::P2 exit_vertex(geo2::P2 a, geo2::P2 b, double R)
{
    const geo2::P2 d = b - a;
    const double len = geo2::norm(d);
    const double t = std::sqrt(std::max(0.0, R * R - 0.25 * len * len));
    return 0.5 * (a + b) + (t / len) * geo2::rot90(d);
}

/// b (between a and c in counter-clockwise order) is covered by the radius-R
/// arc from a to c when it lies in the disk whose circle passes through a and
/// c with center on the inner side.
inline bool covered_by_arc(geo2::P2 a, geo2::P2 b, geo2::P2 c, double R)
{
    if (a == c) return false;
    const geo2::P2 z = exit_vertex(a, c, R);
    return geo2::dist(b, z) <= R * (1.0 + 1e-12);
}

} // namespace detail

/// Relative tolerance under which a minimum enclosing radius equal to R is
/// treated as tangency (single-point intersection).
inline constexpr double kTangencyTol = 1e-9;

/// Exact boundary of the intersection of the Euclidean disks B(g, R).
///
/// The generators are reduced to their convex hull; the region is empty iff
/// their minimum enclosing circle is larger than R. Generators contributing
/// arcs are found by a Graham-type scan over the hull order, which starts at
/// the generator farthest from the enclosing-circle center (always on the
/// boundary).
inline ArcRegion build_arc_region(const BallRegion& B)
{
    detail::require_euclidean_plane(B.norm(), "build_arc_region");
    if (B.whole_space()) throw std::domain_error("build_arc_region: region is the whole space");
    const double R = B.radius();
    const std::vector<geo2::P2> pts = geo2::to_points(B.generators());
    const std::vector<std::size_t> hull_idx = geo2::convex_hull(pts);
    std::vector<geo2::P2> hull;
    hull.reserve(hull_idx.size());
    for (std::size_t i : hull_idx) hull.push_back(pts[i]);

    if (hull.size() == 1) return ArcRegion::disk(geo2::to_vec(hull[0]), R);

    const geo2::Circle mec = geo2::min_enclosing_circle(hull);
    if (mec.radius > R * (1.0 + kTangencyTol)) return ArcRegion::empty(R);
    if (mec.radius >= R * (1.0 - kTangencyTol)) return ArcRegion::point(geo2::to_vec(mec.center), R);

    std::size_t start = 0;
    double far = -1.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const double d = geo2::dist(hull[i], mec.center);
        if (d > far) {
            far = d;
            start = i;
        }
    }

    std::vector<geo2::P2> stack;
    stack.reserve(hull.size() + 1);
    stack.push_back(hull[start]);
    for (std::size_t step = 1; step <= hull.size(); ++step) {
        const geo2::P2 c = hull[(start + step) % hull.size()];
        while (stack.size() >= 2 && detail::covered_by_arc(stack[stack.size() - 2], stack.back(), c, R)) {
            stack.pop_back();
        }
        stack.push_back(c);
    }
    stack.pop_back(); // the start point, pushed again to close the cycle

    std::vector<geo2::P2> vertex_after(stack.size());
    for (std::size_t i = 0; i < stack.size(); ++i) {
        vertex_after[i] = detail::exit_vertex(stack[i], stack[(i + 1) % stack.size()], R);
    }
    return ArcRegion::from_cycle(stack, vertex_after, R);
}

/// The R-strongly convex hull of the arc centers of a region built by
/// build_arc_region, from its vertex structure: each vertex between the arcs of
/// b_i and b_{i+1} is the center of the hull arc from b_i to b_{i+1}.
inline ArcRegion hull_from_polar(const ArcRegion& polar)
{
    const double R = polar.radius();
    switch (polar.kind()) {
    case ArcRegionKind::empty: throw std::domain_error("hull_from_polar: empty polar (hull is the whole space)");
    case ArcRegionKind::point: return ArcRegion::disk(polar.vertices()[0].point, R);
    case ArcRegionKind::full_disk: return ArcRegion::point(polar.arcs()[0].center, R);
    case ArcRegionKind::arcs: break;
    }
    const auto& arcs = polar.arcs();
    const auto& verts = polar.vertices();
    const std::size_t k = arcs.size();
    // Hull arc i is centered at vertex i and runs from center(arc i) to center(arc i+1).
    std::vector<geo2::P2> centers(k);
    std::vector<geo2::P2> vertex_after(k);
    for (std::size_t i = 0; i < k; ++i) {
        centers[i] = geo2::to_p2(verts[i].point);
        vertex_after[i] = geo2::to_p2(arcs[(i + 1) % k].center);
    }
    return ArcRegion::from_cycle(centers, vertex_after, R);
}

} // namespace ballhull
