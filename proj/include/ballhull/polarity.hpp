#pragma once

#include "ballhull/set_oracle.hpp"

#include <random>
#include <string>

namespace ballhull {

enum class HullBackend { exact2d, grid };

inline std::string to_string(HullBackend b) { return b == HullBackend::exact2d ? "exact2d" : "grid"; }

inline HullBackend parse_backend(const std::string& s)
{
    if (s == "exact2d") return HullBackend::exact2d;
    if (s == "grid") return HullBackend::grid;
    throw std::invalid_argument("unknown hull backend: " + s);
}

/// exact2d where available, grid otherwise.
inline HullBackend default_backend(const NormSpec& ns)
{
    return ns.is_euclidean() && ns.dim() == 2 ? HullBackend::exact2d : HullBackend::grid;
}

/// C^rho = intersection of B(c, R) over c in C, stored exactly by its generators.
inline BallRegion polar(const PointSet& C, double R, const NormSpec& ns)
{
    if (C.empty()) throw std::invalid_argument("polar: empty point set");
    if (C.dim() != ns.dim()) throw std::invalid_argument("polar: point dimension differs from norm dimension");
    return BallRegion(C.deduplicated(), R, ns);
}

/// Second polar of a finite set, i.e. its R-strongly convex hull.
///
/// Membership is y in hull <=> F_P(y) <= R where P is the first polar: exact
/// over the arc structure of P in the exact2d backend, or over the grid
/// points of P (reduced to their extreme points) in the grid backend.
struct HullResult {
    HullBackend backend = HullBackend::exact2d;
    bool whole_space = false;
    double resolution = 0.0;
    double radius = 1.0;
    NormSpec norm;
    PointSet input;
    std::optional<ArcRegion> polar_arcs;
    std::optional<ArcRegion> hull_arcs;
    PointSet polar_points; ///< grid backend: extreme grid points of the polar

    /// F_P(y) - R, or -inf for the whole space.
    double level(VecView y) const
    {
        detail::require_dim(y, norm.dim(), "HullResult::level");
        if (whole_space) return -std::numeric_limits<double>::infinity();
        if (polar_arcs) return polar_arcs->farthest(y) - radius;
        return farthest_distance_finite(polar_points, y, norm).value - radius;
    }

    bool contains(VecView y, double tol = 1e-9) const { return level(y) <= tol; }

    /// Export form: the hull as the ball region of a sample of the polar
    /// (arc vertices plus arc points at angular step theta in exact2d).
    BallRegion region(double theta = 2.0 * std::numbers::pi / 720.0) const
    {
        if (whole_space) return BallRegion(PointSet(norm.dim()), radius, norm);
        if (polar_arcs) return BallRegion(polar_arcs->boundary_samples(theta), radius, norm);
        return BallRegion(polar_points, radius, norm);
    }

    std::size_t generator_count(double theta = 2.0 * std::numbers::pi / 720.0) const
    {
        return whole_space ? 0 : region(theta).generators().size();
    }

    SetOracle oracle() const
    {
        if (whole_space) return SetOracle::whole_space(radius, norm);
        if (hull_arcs) return SetOracle(*hull_arcs, norm);
        SetOracle s(BallRegion(polar_points, radius, norm));
        return resolution > 0.0 ? s.with_resolution(resolution) : s;
    }
};

/// R-strongly convex hull of C. A set that lies in no ball of radius R has
/// the whole space as its hull, which is returned as a regular result.
inline HullResult strong_hull(const PointSet& C, double R, const NormSpec& ns, HullBackend backend, double h = 0.0)
{
    HullResult out;
    out.backend = backend;
    out.radius = R;
    out.norm = ns;
    out.input = C;
    const BallRegion P = polar(C, R, ns);

    if (backend == HullBackend::exact2d) {
        detail::require_euclidean_plane(ns, "strong_hull(exact2d)");
        ArcRegion arcs = build_arc_region(P);
        if (arcs.is_empty()) {
            out.whole_space = true;
            return out;
        }
        out.hull_arcs = hull_from_polar(arcs);
        out.polar_arcs = std::move(arcs);
        return out;
    }

    const Box box = P.bounding_box();
    if (box.empty()) {
        out.whole_space = true;
        return out;
    }
    out.resolution = h > 0.0 ? h : default_resolution(box);
    const double tol = 1e-12 * R;
    const GridSample g =
        sample_lattice(Lattice::covering(box, out.resolution), [&](VecView y) { return P.contains(y, tol); });
    if (g.empty()) {
        out.whole_space = true;
        return out;
    }
    out.polar_points = g.extremes;
    return out;
}

namespace detail {

inline bool same_radius(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(a, b); }

inline SetOracle with_resolution_of(SetOracle out, const SetOracle& from)
{
    if (out.exact2d() || std::holds_alternative<PointSet>(out.rep()) || std::holds_alternative<Ball>(out.rep()) ||
        std::holds_alternative<EmptySet>(out.rep()) || out.is_whole_space())
        return out;
    return out.with_resolution(from.resolution());
}

} // namespace detail

/// S^rho = {y : ||y - z|| <= R for all z in S} as a set oracle.
///
/// Finite sets, balls and radius-R arc regions have closed forms; a radius-R
/// ball region maps to the hull of its generators; anything else is replaced
/// by the extreme points of its grid sample.
inline SetOracle polar_of(const SetOracle& S, double R)
{
    if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("polar_of: R must be finite and > 0");
    const NormSpec& ns = S.norm();
    const auto& rep = S.rep();
    if (std::holds_alternative<EmptySet>(rep)) return SetOracle::whole_space(R, ns);
    if (S.is_whole_space()) return SetOracle::empty(ns);
    if (const auto* C = std::get_if<PointSet>(&rep)) return SetOracle(polar(*C, R, ns));
    if (const auto* B = std::get_if<Ball>(&rep)) {
        if (B->radius > R * (1.0 + 1e-12)) return SetOracle::empty(ns);
        return SetOracle(Ball(B->center, std::max(0.0, R - B->radius)), ns);
    }
    if (const ArcRegion* A = S.exact2d()) {
        if (A->is_empty()) return SetOracle::whole_space(R, ns);
        if (detail::same_radius(A->radius(), R)) return SetOracle(hull_from_polar(*A), ns);
        return SetOracle(BallRegion(A->boundary_samples(), R, ns));
    }
    if (const auto* B = std::get_if<BallRegion>(&rep); B && detail::same_radius(B->radius(), R)) {
        if (B->bounding_box().empty()) return SetOracle::whole_space(R, ns);
        return strong_hull(B->generators(), R, ns, HullBackend::grid, S.resolution()).oracle();
    }
    const auto g = S.sample();
    if (g->empty()) return SetOracle::whole_space(R, ns);
    return detail::with_resolution_of(SetOracle(BallRegion(g->extremes, R, ns)), S);
}

/// Second polar of a set oracle.
inline SetOracle hull_of(const SetOracle& S, double R) { return polar_of(polar_of(S, R), R); }

struct ConvexityReport {
    bool strongly_convex = false;
    bool hull_whole_space = false;
    HullBackend backend = HullBackend::exact2d;
    double resolution = 0.0;
    double tolerance = 0.0;
    std::size_t probes = 0;
    std::size_t enlarged = 0; ///< probes in the sampled hull but outside the set
    double max_excess = 0.0;  ///< largest distance from such a probe to the set samples
    std::vector<Vec> witnesses;
};

/// Decides C = hull(C) on samples: the hull of the grid sample of S is probed
/// on the same grid around S, and every hull probe outside S farther than
/// tol from the sampled set is a witness of strict enlargement. The verdict
/// is resolution-bounded. Default tol is 2h (exact2d) or 4h (grid hulls).
inline ConvexityReport is_strongly_convex(const SetOracle& S, double R, double tol = -1.0, double h = 0.0,
                                          std::size_t max_witnesses = 16)
{
    if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("is_strongly_convex: R must be finite and > 0");
    const NormSpec& ns = S.norm();
    ConvexityReport rep;
    rep.backend = default_backend(ns);
    rep.resolution = h > 0.0 ? h : S.resolution();
    rep.tolerance = tol >= 0.0 ? tol : (rep.backend == HullBackend::exact2d ? 2.0 : 4.0) * rep.resolution;

    if (S.is_whole_space()) {
        rep.strongly_convex = true;
        rep.hull_whole_space = true;
        return rep;
    }
    const GridSample g = S.sample_at(rep.resolution);
    if (g.empty()) throw std::domain_error(detail::concat("is_strongly_convex: set is empty at resolution ", rep.resolution));

    const HullResult hull = strong_hull(g.extremes, R, ns, rep.backend, rep.resolution);
    if (hull.whole_space) {
        rep.hull_whole_space = true;
        return rep;
    }

    const Box sbox = S.bounding_box();
    const double half = 0.5 * sbox.diameter();
    const double sagitta = half >= R ? R : R - std::sqrt(R * R - half * half);
    const Lattice probes = Lattice::covering(sbox.expanded(sagitta + 2.0 * rep.resolution), rep.resolution);
    rep.probes = probes.size();

    std::vector<double> excess(probes.size(), 0.0);
    parallel_for(probes.size(), [&](std::size_t i) {
        double p[8];
        probes.node(i, p);
        const VecView y(p, ns.dim());
        if (!hull.contains(y, 0.0) || S.contains(y, 0.0)) return;
        excess[i] = std::max(1e-300, nearest_distance_finite(g.boundary, y, ns).value);
    });
    for (std::size_t i = 0; i < excess.size(); ++i) {
        if (excess[i] == 0.0) continue;
        ++rep.enlarged;
        rep.max_excess = std::max(rep.max_excess, excess[i]);
        if (excess[i] > rep.tolerance && rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(probes.node(i));
    }
    rep.strongly_convex = rep.max_excess <= rep.tolerance;
    return rep;
}

struct SupportSumReport {
    double max_deviation = 0.0;
    Vec worst_direction;
    double resolution = 0.0;
};

/// max over u of |sigma_C(u) + sigma_{C^rho}(-u) - R ||u||_2|; zero for a
/// strongly convex C in the Euclidean norm.
inline SupportSumReport support_sum_check(const SetOracle& C, double R, const DirectionSet& dirs)
{
    if (!C.norm().is_euclidean()) {
        throw Unsupported("support_sum_check: the support identity holds for the Euclidean norm only");
    }
    const SetOracle P = polar_of(C, R);
    SupportSumReport rep;
    for (const Vec& u : dirs.directions) {
        const Measured a = support_function(C, u);
        const Measured b = support_function(P, scale(u, -1.0));
        const double dev = std::abs(a.value + b.value - R * euclidean_norm(u));
        rep.resolution = std::max({rep.resolution, a.resolution, b.resolution});
        if (dev > rep.max_deviation || rep.worst_direction.empty()) {
            rep.max_deviation = dev;
            rep.worst_direction = u;
        }
    }
    return rep;
}

struct SigmaConvexityReport {
    double worst_violation = -std::numeric_limits<double>::infinity();
    Vec u;
    Vec v;
    double resolution = 0.0;
    std::size_t segments = 0;
};

/// Midpoint convexity of g = R ||.||_2 - sigma_C on random short segments
/// d +- s e around unit directions d. A positive worst violation
/// g(d) - (g(u) + g(v))/2 > 0 refutes convexity.
inline SigmaConvexityReport sigma_convexity_check(const SetOracle& C, double R, std::size_t segments,
                                                  std::uint64_t seed)
{
    const NormSpec& ns = C.norm();
    if (!ns.is_euclidean()) throw Unsupported("sigma_convexity_check: requires the Euclidean norm");
    const std::size_t n = ns.dim();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> len(1e-3, 1.0 / (2.0 * R + 1.0));
    auto unit = [&] {
        Vec d(n);
        double s = 0.0;
        do {
            s = 0.0;
            for (double& x : d) {
                x = gauss(rng);
                s += x * x;
            }
        } while (s < 1e-12);
        return scale(d, 1.0 / std::sqrt(s));
    };
    auto g = [&](const Vec& u, double& res) {
        const Measured m = support_function(C, u);
        res = std::max(res, m.resolution);
        return R * euclidean_norm(u) - m.value;
    };

    SigmaConvexityReport rep;
    rep.segments = segments;
    for (std::size_t k = 0; k < segments; ++k) {
        const Vec d = unit();
        const Vec e = unit();
        const double s = len(rng);
        Vec u = axpy(d, s, e);
        Vec v = axpy(d, -s, e);
        const double viol = g(d, rep.resolution) - 0.5 * (g(u, rep.resolution) + g(v, rep.resolution));
        if (viol > rep.worst_violation) {
            rep.worst_violation = viol;
            rep.u = std::move(u);
            rep.v = std::move(v);
        }
    }
    return rep;
}

} // namespace ballhull
