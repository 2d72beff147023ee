#pragma once

#include "ballhull/function_lab.hpp"
#include "ballhull/instances.hpp"
#include "ballhull/report.hpp"

#include <map>

namespace ballhull {

struct SuiteConfig {
    std::size_t instances = 0; ///< 0: suite default
    std::uint64_t seed = 0;
    double h = 0.0;            ///< 0: suite default
    NormKind norm = NormKind::euclidean;
    double p = 2.0;
    std::size_t dim = 2;
    std::optional<HullBackend> backend;
    std::optional<double> R;     ///< fixed radius instead of a random one
    std::size_t probes = 10000;  ///< random membership probes per instance
    std::size_t probe_grid = 256; ///< probe lattice per axis for function comparisons
    std::size_t grid_nodes = 0;  ///< when > 0, function grids get this many nodes per axis
    std::size_t max_points = 30;
    double box_half = 0.0;       ///< function-lab suites: half-width of the box around 0 (0: suite default)
    double alpha = 0.01;
    double min_length = 10.0;
    std::size_t samples = 10000; ///< alpha-gap samples, midpoint pairs, sigma segments
    std::size_t cert_probes = 100;
    std::optional<double> k;     ///< tolerance overrides
    std::optional<double> eps;
    std::size_t max_witnesses = 8;
    std::optional<std::uint64_t> instance_seed; ///< re-run one instance by its recorded seed
};

namespace suite_detail {

struct Context {
    const SuiteConfig& cfg;
    NormSpec ns;
    HullBackend backend;
    double h;
    double band;
    std::uint64_t seed;
    std::size_t index;
};

inline double boundary_distance(const SetOracle& S, VecView y)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (const ArcRegion* a = S.exact2d()) return a->is_empty() ? inf : a->boundary_distance(y);
    const auto& rep = S.rep();
    if (std::holds_alternative<EmptySet>(rep) || S.is_whole_space()) return inf;
    if (const auto* C = std::get_if<PointSet>(&rep)) return nearest_distance_finite(*C, y, S.norm()).value;
    if (const auto* B = std::get_if<Ball>(&rep)) return std::abs(S.norm().distance(y, B->center) - B->radius);
    const auto g = S.sample();
    return g->empty() ? inf : nearest_distance_finite(g->boundary, y, S.norm()).value;
}

inline Box bounding_union(std::initializer_list<const SetOracle*> sets)
{
    std::optional<Box> box;
    for (const SetOracle* s : sets) {
        if (s->is_whole_space() || s->is_empty_exactly()) continue;
        const Box b = s->bounding_box();
        if (b.empty()) continue;
        box = box ? box->hull(b) : b;
    }
    if (!box) throw std::domain_error("suite: every compared set is empty or unbounded");
    return *box;
}

/// Probes in A but not in B, or (symmetric) in exactly one of them. A
/// disagreement counts when it lies farther than the band from the boundary
/// of the reference set `ref`.
inline void compare_membership(const PointSet& probes, const SetOracle& A, const SetOracle& B, const SetOracle& ref,
                               bool symmetric, const std::string& label, const Context& cx, InstanceResult& out)
{
    std::vector<char> in_a(probes.size()), in_b(probes.size());
    parallel_for(
        probes.size(),
        [&](std::size_t i) {
            in_a[i] = A.contains(probes[i], 0.0);
            in_b[i] = B.contains(probes[i], 0.0);
        },
        256);
    std::size_t disagreements = 0, outside = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const bool bad = symmetric ? in_a[i] != in_b[i] : (in_a[i] && !in_b[i]);
        if (!bad) continue;
        ++disagreements;
        const double d = boundary_distance(ref, probes[i]);
        worst = std::max(worst, d);
        if (d <= cx.band) continue;
        ++outside;
        if (out.witnesses.size() < cx.cfg.max_witnesses) {
            out.witnesses.push_back({{{"check", label}, {"probe_index", i}, {"y", num(probes[i])}},
                                     {{"in_first", static_cast<bool>(in_a[i])},
                                      {"in_second", static_cast<bool>(in_b[i])},
                                      {"boundary_distance", num(d)}}});
        }
    }
    out.checks.push_back({label, worst, "<=", cx.band});
    out.details[label] = {{"probes", probes.size()}, {"disagreements", disagreements}, {"outside_band", outside}};
}

inline InstanceParams hull_params(const Context& cx, std::size_t min_points = 3)
{
    InstanceParams p;
    p.norm = cx.cfg.norm;
    p.p = cx.cfg.p;
    p.dim = cx.cfg.dim;
    p.min_points = std::min(min_points, cx.cfg.max_points);
    p.max_points = cx.cfg.max_points;
    p.R_lo = 0.8;
    p.R_hi = 1.5;
    if (cx.cfg.R) p.R_lo = p.R_hi = *cx.cfg.R;
    return p;
}

struct HullInstance {
    PointSet C;
    double R = 1.0;
};

inline HullInstance hull_instance(const Context& cx, std::size_t min_points = 3)
{
    const Scene sc = generate_instance(InstanceKind::hull, cx.seed, hull_params(cx, min_points));
    return {sc.sets.front().points, *sc.R};
}

inline SetOracle at_resolution(SetOracle S, double h) { return S.exact2d() ? S : S.with_resolution(h); }

inline SetOracle hull_oracle(const PointSet& C, double R, const Context& cx)
{
    return at_resolution(strong_hull(C, R, cx.ns, cx.backend, cx.h).oracle(), cx.h);
}

inline SetOracle polar_oracle(const PointSet& C, double R, const Context& cx)
{
    return at_resolution(SetOracle(polar(C, R, cx.ns)), cx.h);
}

inline PointSet membership_probes(const Box& box, double R, const Context& cx)
{
    return random_probes(box.expanded(0.1 * R), cx.cfg.probes, cx.seed ^ 0x5bd1e995ULL);
}

/// The box widened outward to multiples of h.
inline Box snapped_box(const Box& b, double h)
{
    Box out = b;
    for (std::size_t k = 0; k < b.dim(); ++k) {
        out.lo[k] = std::floor(b.lo[k] / h) * h;
        out.hi[k] = std::ceil(b.hi[k] / h) * h;
    }
    return out;
}

/// Grid for function comparisons: the box, and the spacing (overridden by
/// grid_nodes).
inline std::pair<Box, double> function_grid(const Box& want, const Context& cx)
{
    double h = cx.h;
    if (cx.cfg.grid_nodes > 1) {
        double w = 0.0;
        for (std::size_t k = 0; k < want.dim(); ++k) w = std::max(w, want.hi[k] - want.lo[k]);
        h = w / static_cast<double>(cx.cfg.grid_nodes - 1);
        Box b = want;
        for (std::size_t k = 0; k < want.dim(); ++k) b.hi[k] = b.lo[k] + w;
        return {b, h};
    }
    return {snapped_box(want, h), h};
}

inline Lattice probe_lattice(const Box& box, std::size_t per_axis)
{
    Lattice L;
    L.lo = box.lo;
    double w = 0.0;
    for (std::size_t k = 0; k < box.dim(); ++k) w = std::max(w, box.hi[k] - box.lo[k]);
    L.h = w / static_cast<double>(std::max<std::size_t>(per_axis, 2) - 1);
    for (std::size_t k = 0; k < box.dim(); ++k) {
        L.counts.push_back(static_cast<std::size_t>(std::floor((box.hi[k] - box.lo[k]) / L.h + 1e-9)) + 1);
    }
    return L;
}

inline json instance_json(const PointSet& C, double R)
{
    return {{"points", points_to_json(C)}, {"R", R}};
}

// Polarity calculus.

inline InstanceResult run_ordrev(const Context& cx)
{
    InstanceResult out;
    const HullInstance inst = hull_instance(cx, 6);
    const std::size_t half = std::max<std::size_t>(1, inst.C.size() / 2);
    PointSet C(inst.C.dim());
    for (std::size_t i = 0; i < half; ++i) C.push_back(inst.C[i]);
    const PointSet& D = inst.C;
    const double R = inst.R;
    out.details["instance"] = {{"C", points_to_json(C)}, {"D", points_to_json(D)}, {"R", R}};

    const SetOracle PC = polar_oracle(C, R, cx), PD = polar_oracle(D, R, cx);
    const SetOracle HC = hull_oracle(C, R, cx), HD = hull_oracle(D, R, cx);
    const PointSet probes = membership_probes(bounding_union({&PC, &HD}), R, cx);
    compare_membership(probes, PD, PC, PC, false, "polar_reversal", cx, out);
    compare_membership(probes, HC, HD, HD, false, "hull_monotone", cx, out);
    return out;
}

inline InstanceResult run_incl(const Context& cx)
{
    InstanceResult out;
    const auto [C, R] = hull_instance(cx);
    out.details["instance"] = instance_json(C, R);
    const HullResult H = strong_hull(C, R, cx.ns, cx.backend, cx.h);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < C.size(); ++i) {
        const double lv = H.level(C[i]);
        worst = std::max(worst, lv);
        if (lv > cx.band && out.witnesses.size() < cx.cfg.max_witnesses) {
            out.witnesses.push_back({{{"check", "input_in_hull"}, {"point_index", i}, {"c", num(C[i])}},
                                     {{"hull_level", num(lv)}}});
        }
    }
    out.checks.push_back({"input_in_hull", std::max(0.0, worst), "<=", cx.band});
    out.details["max_hull_level"] = num(worst);
    return out;
}

inline InstanceResult run_triple(const Context& cx)
{
    InstanceResult out;
    const auto [C, R] = hull_instance(cx);
    out.details["instance"] = instance_json(C, R);
    const SetOracle P1 = polar_oracle(C, R, cx);
    const SetOracle P3 = at_resolution(polar_of(hull_oracle(C, R, cx), R), cx.h);
    const PointSet probes = membership_probes(bounding_union({&P1, &P3}), R, cx);
    compare_membership(probes, P3, P1, P1, true, "third_polar", cx, out);
    return out;
}

inline InstanceResult run_hull_idem(const Context& cx)
{
    InstanceResult out;
    const auto [C, R] = hull_instance(cx);
    out.details["instance"] = instance_json(C, R);
    const SetOracle H = hull_oracle(C, R, cx);
    const SetOracle H2 = at_resolution(hull_of(H, R), cx.h);
    const PointSet probes = membership_probes(bounding_union({&H, &H2}), R, cx);
    compare_membership(probes, H2, H, H, true, "fourth_polar", cx, out);
    return out;
}

inline InstanceResult run_involution(const Context& cx)
{
    InstanceResult out;
    const auto [C, R] = hull_instance(cx);
    out.details["instance"] = instance_json(C, R);
    const BallRegion P = polar(C, R, cx.ns);
    SetOracle S(P);
    if (cx.backend == HullBackend::grid) {
        // hide the arc structure so that both polars go through the grid
        S = SetOracle(PredicateSet{[P](VecView y) { return P.contains(y, 1e-12 * P.radius()); }, P.bounding_box()}, cx.ns);
    }
    S = at_resolution(S, cx.h);
    const SetOracle S2 = at_resolution(hull_of(S, R), cx.h);
    const SetOracle ref = polar_oracle(C, R, cx);
    const PointSet probes = membership_probes(bounding_union({&ref, &S2}), R, cx);
    compare_membership(probes, S2, ref, ref, true, "involution", cx, out);
    return out;
}

// Balls.

inline InstanceResult run_ball_polar(const Context& cx)
{
    InstanceResult out;
    std::mt19937_64 rng(cx.seed);
    Vec c(cx.ns.dim());
    for (double& v : c) v = detail::uniform(rng, -1.0, 1.0);
    const double r = detail::uniform(rng, 0.2, 1.0);
    const double R = cx.cfg.R ? std::max(*cx.cfg.R, r) : r + detail::uniform(rng, 0.1, 1.0);
    const double R_small = r * detail::uniform(rng, 0.5, 0.95);
    const DirectionSet dirs = unit_sphere_samples(cx.ns, SphereSide::primal, 64);
    PointSet C(cx.ns.dim());
    for (const Vec& d : dirs.directions) C.push_back(axpy(c, r, d));
    out.details["instance"] = {{"center", num(c)}, {"r", r}, {"R", R}, {"R_small", R_small}, {"samples", 64}};

    const bool exact = cx.backend == HullBackend::exact2d;
    const double rho = R - r;
    const double theta = 2.0 * std::numbers::pi / 720.0;
    const DirectionSet circle = unit_sphere_samples(cx.ns, SphereSide::primal, 720);

    // symmetric boundary deviation from the sphere of radius rho about c
    double dev = 0.0;
    std::size_t worst_circle = 0;
    if (exact) {
        const ArcRegion A = build_arc_region(BallRegion(C, R, cx.ns));
        if (A.is_empty()) {
            dev = std::numeric_limits<double>::infinity();
        } else {
            const PointSet bd = A.boundary_samples(theta);
            for (std::size_t i = 0; i < bd.size(); ++i) dev = std::max(dev, std::abs(cx.ns.distance(bd[i], c) - rho));
            for (std::size_t j = 0; j < circle.size(); ++j) {
                const double d = A.boundary_distance(axpy(c, rho, circle[j]));
                if (d > dev) {
                    dev = d;
                    worst_circle = j;
                }
            }
        }
    } else {
        const GridSample g = SetOracle(BallRegion(C, R, cx.ns)).sample_at(cx.h);
        if (g.empty()) {
            dev = std::numeric_limits<double>::infinity();
        } else {
            for (std::size_t i = 0; i < g.boundary.size(); ++i) {
                dev = std::max(dev, std::abs(cx.ns.distance(g.boundary[i], c) - rho));
            }
            for (std::size_t j = 0; j < circle.size(); ++j) {
                const double d = nearest_distance_finite(g.boundary, axpy(c, rho, circle[j]), cx.ns).value;
                if (d > dev) {
                    dev = d;
                    worst_circle = j;
                }
            }
        }
    }
    out.checks.push_back({"boundary_deviation", dev, "<=", cx.band});
    if (dev > cx.band) {
        out.witnesses.push_back({{{"check", "boundary_deviation"}, {"circle_point", num(axpy(c, rho, circle[worst_circle]))}},
                                 {{"deviation", num(dev)}}});
    }

    // R < r: no point is within R of the whole sampled sphere
    bool small_empty = false;
    if (exact) small_empty = build_arc_region(BallRegion(C, R_small, cx.ns)).is_empty();
    else small_empty = SetOracle(BallRegion(C, R_small, cx.ns)).sample_at(cx.h).empty();
    out.checks.push_back({"smaller_R_nonempty", small_empty ? 0.0 : 1.0, "<=", 0.0});

    // R = r: the polar shrinks to (about) the center
    double diam = 0.0;
    if (exact) {
        const ArcRegion A = build_arc_region(BallRegion(C, r, cx.ns));
        diam = A.is_empty() ? 0.0 : A.diameter();
    } else {
        const GridSample g = SetOracle(BallRegion(C, r, cx.ns)).sample_at(cx.h);
        for (std::size_t i = 0; i < g.extremes.size(); ++i) {
            for (std::size_t j = i + 1; j < g.extremes.size(); ++j) {
                diam = std::max(diam, cx.ns.distance(g.extremes[i], g.extremes[j]));
            }
        }
    }
    out.checks.push_back({"equal_R_diameter", diam, "<=", cx.band});
    out.details["equal_R_diameter"] = num(diam);
    return out;
}

// Farthest functions of strongly convex sets.

struct StrongSet {
    PointSet points;
    double R = 1.0;
    SetOracle C;     ///< hull of the points (strongly convex)
    SetOracle polar; ///< its polar
    Box box;         ///< C's 2R-neighborhood
};

inline StrongSet strong_instance(const Context& cx)
{
    const auto [pts, R] = hull_instance(cx);
    SetOracle C = hull_oracle(pts, R, cx);
    SetOracle P = polar_oracle(pts, R, cx);
    const Box box = C.bounding_box().expanded(2.0 * R);
    return {pts, R, std::move(C), std::move(P), box};
}

template <typename Fn>
double max_over_lattice(const Lattice& L, Fn&& fn, std::size_t& argmax)
{
    std::vector<double> v(L.size());
    parallel_for(
        L.size(),
        [&](std::size_t i) {
            double p[8];
            L.node(i, p);
            v[i] = fn(VecView(p, L.dim()));
        },
        256);
    argmax = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    return v[argmax];
}

inline InstanceResult run_ub_farthest(const Context& cx)
{
    InstanceResult out;
    const StrongSet s = strong_instance(cx);
    out.details["instance"] = instance_json(s.points, s.R);
    const Lattice L = probe_lattice(s.box, cx.cfg.probe_grid);
    std::size_t at = 0;
    const double worst = max_over_lattice(
        L, [&](VecView x) { return farthest_distance(s.C, x).value - nearest_distance(s.polar, x).value - s.R; }, at);
    out.checks.push_back({"F_minus_d_minus_R", worst, "<=", cx.band});
    out.details["probes"] = L.size();
    if (worst > cx.band) {
        const Vec x = L.node(at);
        out.witnesses.push_back({{{"check", "F_minus_d_minus_R"}, {"x", num(x)}},
                                 {{"F_C", num(farthest_distance(s.C, x).value)},
                                  {"d_polar", num(nearest_distance(s.polar, x).value)}}});
    }
    return out;
}

inline InstanceResult run_gap_bound(const Context& cx)
{
    InstanceResult out;
    const StrongSet s = strong_instance(cx);
    out.details["instance"] = instance_json(s.points, s.R);
    const Lattice L = probe_lattice(s.box, cx.cfg.probe_grid);
    std::size_t at = 0;
    const double sup = max_over_lattice(
        L, [&](VecView x) { return std::abs(farthest_distance(s.polar, x).value - farthest_distance(s.C, x).value); },
        at);
    out.checks.push_back({"sup_gap_minus_R", sup - s.R, "<=", cx.band});
    out.details["sup_gap"] = num(sup);
    out.details["probes"] = L.size();
    if (sup - s.R > cx.band) {
        const Vec x = L.node(at);
        out.witnesses.push_back({{{"check", "sup_gap_minus_R"}, {"x", num(x)}},
                                 {{"F_polar", num(farthest_distance(s.polar, x).value)},
                                  {"F_C", num(farthest_distance(s.C, x).value)}}});
    }
    return out;
}

inline InstanceResult run_farth_polar(const Context& cx)
{
    InstanceResult out;
    const StrongSet s = strong_instance(cx);
    out.details["instance"] = instance_json(s.points, s.R);
    const auto [box, h] = function_grid(s.box, cx);
    out.h = h;
    const GridFunction f = farthest_field(s.C, box, h);
    const PointSet Z = sublevel_extremes(f, s.R);
    const Lattice L = probe_lattice(s.box, cx.cfg.probe_grid);
    std::size_t at = 0;
    auto err = [&](VecView x) {
        return std::abs(farthest_distance(s.polar, x).value - farthest_distance_finite(Z, x, cx.ns).value);
    };
    const double worst = max_over_lattice(L, err, at);
    const double band = (cx.cfg.k ? *cx.cfg.k : 2.0) * h + (cx.cfg.eps ? *cx.cfg.eps : 1e-9);
    out.checks.push_back({"F_polar_vs_sublevel_max", worst, "<=", band});
    out.details["function_nodes"] = f.size();
    out.details["probes"] = L.size();
    if (worst > band) {
        const Vec x = L.node(at);
        out.witnesses.push_back({{{"check", "F_polar_vs_sublevel_max"}, {"x", num(x)}}, {{"error", num(err(x))}}});
    }
    return out;
}

inline InstanceResult run_funct_eq(const Context& cx)
{
    InstanceResult out;
    const StrongSet s = strong_instance(cx);
    out.details["instance"] = instance_json(s.points, s.R);
    const auto [box, h] = function_grid(s.box, cx);
    out.h = h;
    const GridFunction f = farthest_field(s.C, box, h);
    // G = intersection of B(z, R) over the grid part of {F_C <= R}
    const SetOracle G = at_resolution(SetOracle(BallRegion(sublevel_extremes(f, s.R), s.R, cx.ns)), h);
    const Lattice L = probe_lattice(s.box, cx.cfg.probe_grid);
    std::vector<double> err(L.size());
    std::vector<char> inside(L.size());
    parallel_for(
        L.size(),
        [&](std::size_t i) {
            double p[8];
            L.node(i, p);
            const VecView x(p, L.dim());
            err[i] = std::abs(farthest_distance(G, x).value - farthest_distance(s.C, x).value);
            inside[i] = s.C.contains(x, 0.0);
        },
        256);
    const double band = (cx.cfg.k ? *cx.cfg.k : 4.0) * h + (cx.cfg.eps ? *cx.cfg.eps : 1e-9);
    std::size_t n_in = 0, pass_in = 0, n_out = 0, pass_out = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const bool ok = err[i] <= band;
        (inside[i] ? n_in : n_out) += 1;
        (inside[i] ? pass_in : pass_out) += ok ? 1 : 0;
        if (err[i] > worst) worst = err[i];
        if (!ok && out.witnesses.size() < cx.cfg.max_witnesses) {
            out.witnesses.push_back({{{"check", "functional_equation"}, {"x", num(L.node(i))}, {"x_in_C", static_cast<bool>(inside[i])}},
                                     {{"error", num(err[i])}}});
        }
    }
    out.checks.push_back({"functional_equation", worst, "<=", band});
    out.details["x_in_C"] = {{"probes", n_in}, {"pass", pass_in}, {"pass_rate", n_in ? double(pass_in) / n_in : 1.0}};
    out.details["x_not_in_C"] = {{"probes", n_out}, {"pass", pass_out}, {"pass_rate", n_out ? double(pass_out) / n_out : 1.0}};
    return out;
}

inline InstanceResult run_support_sum(const Context& cx)
{
    InstanceResult out;
    const auto [C, R] = hull_instance(cx);
    out.details["instance"] = instance_json(C, R);
    const SetOracle S = hull_oracle(C, R, cx);
    const SupportSumReport rep = support_sum_check(S, R, unit_sphere_samples(cx.ns, SphereSide::primal, 360));
    out.checks.push_back({"support_sum_deviation", rep.max_deviation, "<=", cx.band});
    out.details["resolution"] = rep.resolution;
    if (rep.max_deviation > cx.band) {
        out.witnesses.push_back({{{"check", "support_sum_deviation"}, {"u", num(rep.worst_direction)}},
                                 {{"deviation", num(rep.max_deviation)}}});
    }
    return out;
}

inline InstanceResult run_sigma_convex(const Context& cx)
{
    InstanceResult out;
    const auto [C, R] = hull_instance(cx);
    out.details["instance"] = instance_json(C, R);
    const SetOracle S = hull_oracle(C, R, cx);
    const SigmaConvexityReport rep = sigma_convexity_check(S, R, cx.cfg.samples, cx.seed ^ 0x2545f491ULL);
    out.checks.push_back({"midpoint_violation", rep.worst_violation, "<=", cx.band});
    out.details["segments"] = rep.segments;
    if (rep.worst_violation > cx.band) {
        out.witnesses.push_back({{{"check", "midpoint_violation"}, {"u", num(rep.u)}, {"v", num(rep.v)}},
                                 {{"violation", num(rep.worst_violation)}}});
    }
    return out;
}

// Function lab.

inline PointSet small_generators(const Context& cx, std::size_t n, double spread)
{
    std::mt19937_64 rng(cx.seed);
    PointSet C(cx.ns.dim());
    Vec p(cx.ns.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (double& v : p) v = detail::uniform(rng, -spread, spread);
        C.push_back(p);
    }
    return C;
}

inline Box centered_box(const Context& cx, double default_half)
{
    const double half = cx.cfg.box_half > 0.0 ? cx.cfg.box_half : default_half;
    return Box::cube(cx.ns.dim(), -half, half);
}

inline InstanceResult run_char_farthest(const Context& cx)
{
    InstanceResult out;
    const PointSet C = small_generators(cx, 20, 0.3);
    out.details["instance"] = {{"points", points_to_json(C)}};
    const auto [box, h] = function_grid(centered_box(cx, 4.0), cx);
    out.h = h;
    const GridFunction f = farthest_field(SetOracle(C, cx.ns), box, h);
    const FarthestCertificate cert = certify_farthest(f, cx.cfg.cert_probes, cx.seed, cx.cfg.samples);
    double dev = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < cert.cond_a.estimates.size(); ++i) {
        const double d = std::abs(cert.cond_a.estimates[i] - 1.0);
        if (d > dev) {
            dev = d;
            worst = i;
        }
    }
    out.checks.push_back({"roundtrip_error", cert.roundtrip_error, "<=", cert.roundtrip_tol});
    out.checks.push_back({"condition_a_deviation", dev, "<=", cert.cond_a.tol_a});
    out.checks.push_back({"condition_b_worst_gap", cert.cond_b.finite ? cert.cond_b.worst_gap : -kInfSentinel, ">=",
                          -cert.cond_b.tol_b});
    out.details["condition_a"] = {{"probes", cert.cond_a.probes.size()}, {"eps", cert.cond_a.eps},
                                  {"tol_a", cert.cond_a.tol_a}, {"certified", cert.cond_a.certified},
                                  {"shrunk_into_box", cert.cond_a.shrunk}};
    out.details["condition_b"] = {{"pairs", cert.cond_b.pairs}, {"finite", cert.cond_b.finite},
                                  {"worst_u", num(cert.cond_b.u)}, {"worst_v", num(cert.cond_b.v)}};
    out.details["certified"] = cert.certified();
    if (dev > cert.cond_a.tol_a) {
        out.witnesses.push_back({{{"check", "condition_a_deviation"}, {"x", num(cert.cond_a.probes[worst])}},
                                 {{"estimate", num(cert.cond_a.estimates[worst])}}});
    }
    if (cert.cond_b.worst_gap < -cert.cond_b.tol_b) {
        out.witnesses.push_back({{{"check", "condition_b_worst_gap"}, {"u", num(cert.cond_b.u)}, {"v", num(cert.cond_b.v)}},
                                 {{"gap", num(cert.cond_b.worst_gap)}}});
    }
    return out;
}

inline InstanceResult run_fR_involution(const Context& cx)
{
    static constexpr std::array<std::pair<double, double>, 3> kFixed{{{0.0, 1.0}, {0.3, 1.0}, {0.5, 2.0}}};
    InstanceResult out;
    double r = 0.0, R = 1.0;
    // seeds 0, 1, 2 are the closed-form examples
    if (cx.seed < kFixed.size()) {
        std::tie(r, R) = kFixed[cx.seed];
    } else {
        std::mt19937_64 rng(cx.seed);
        r = detail::uniform(rng, 0.0, 0.5);
        R = r + detail::uniform(rng, 0.5, 1.5);
    }
    if (cx.cfg.R) R = *cx.cfg.R;
    out.details["instance"] = {{"r", r}, {"R", R}};
    const auto [box, h] = function_grid(centered_box(cx, 4.0), cx);
    out.h = h;
    const NormSpec ns = cx.ns;
    const GridFunction f = GridFunction::sample(box, h, ns, [&](VecView x) { return ns.eval(x) + r; });
    const GridFunction fR = transform_fR(f, R);
    const GridFunction fRR = transform_fR(fR, R);
    double e1 = 0.0, e2 = 0.0;
    std::size_t w1 = 0, w2 = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double a = std::abs(fR.value(i) - (f.value(i) - r + R - r));
        const double b = std::abs(fRR.value(i) - f.value(i));
        if (a > e1) e1 = a, w1 = i;
        if (b > e2) e2 = b, w2 = i;
    }
    const double band = (cx.cfg.k ? *cx.cfg.k : 4.0) * h + (cx.cfg.eps ? *cx.cfg.eps : 1e-9);
    out.checks.push_back({"sup_fRR_minus_f", e2, "<=", band});
    out.checks.push_back({"sup_fR_minus_closed_form", e1, "<=", 2.0 * h + 1e-9});
    if (e2 > band) out.witnesses.push_back({{{"check", "sup_fRR_minus_f"}, {"y", num(f.node(w2))}}, {{"error", num(e2)}}});
    if (e1 > 2.0 * h + 1e-9) {
        out.witnesses.push_back({{{"check", "sup_fR_minus_closed_form"}, {"y", num(f.node(w1))}}, {{"error", num(e1)}}});
    }
    return out;
}

inline InstanceResult run_no_strong_convexity(const Context& cx)
{
    InstanceResult out;
    const PointSet C = small_generators(cx, 1 + cx.seed % cx.cfg.max_points, 1.0);
    out.details["instance"] = {{"points", points_to_json(C)}, {"alpha", cx.cfg.alpha}, {"min_length", cx.cfg.min_length}};
    const auto [box, h] = function_grid(centered_box(cx, 20.0), cx);
    out.h = h;
    const GridFunction f = farthest_field(SetOracle(C, cx.ns), box, h);
    const AlphaGapSearch s = alpha_gap_search(f, cx.cfg.alpha, cx.cfg.min_length, cx.cfg.samples, cx.seed ^ 0x85ebca6bULL);
    out.checks.push_back({"worst_alpha_gap", s.worst_gap, "<", -s.tol});
    out.checks.push_back({"negative_witnesses", static_cast<double>(s.negatives), ">=", 1.0});
    out.details["samples"] = s.samples;
    out.details["negatives"] = s.negatives;
    // the negative gap is the evidence this suite looks for
    if (s.samples > 0) {
        out.witnesses.push_back({{{"check", "worst_alpha_gap"}, {"x", num(s.x)}, {"y", num(s.y)}, {"lambda", s.lambda},
                                  {"alpha", cx.cfg.alpha}},
                                 {{"gap", num(s.worst_gap)}}});
    }
    return out;
}

inline InstanceResult run_sublevel_sc(const Context& cx)
{
    InstanceResult out;
    InstanceParams p = hull_params(cx);
    const Scene sc = generate_instance(InstanceKind::points, cx.seed, p);
    const PointSet C = sc.sets.front().points;
    const NormSpec ns = cx.ns;

    double m = 0.0;
    if (ns.is_euclidean() && ns.dim() == 2) {
        m = geo2::min_enclosing_circle(geo2::to_points(C)).radius;
    } else {
        const Box b = snapped_box(C.bounding_box(), cx.h);
        m = farthest_field(SetOracle(C, ns), b, cx.h).min_value();
    }
    out.details["instance"] = {{"points", points_to_json(C)}, {"min_F", m}};

    double worst_excess = 0.0, tol = 0.0;
    std::size_t not_convex = 0, witnesses = 0;
    json per_R = json::array();
    for (double delta : {0.05, 0.5, 1.5}) {
        const double R = m + delta;
        const BallRegion sub(C, R, ns);
        // the sublevel set given by F_C alone, so it is only ever sampled
        SetOracle S(PredicateSet{[C, ns, R](VecView y) { return farthest_distance_finite(C, y, ns).value <= R; },
                                 sub.bounding_box()},
                    ns);
        S = S.with_resolution(cx.h);
        const ConvexityReport rep = is_strongly_convex(S, R, cx.cfg.k ? *cx.cfg.k * cx.h : -1.0, cx.h, cx.cfg.max_witnesses);
        tol = rep.tolerance;
        worst_excess = std::max(worst_excess, rep.max_excess);
        not_convex += rep.strongly_convex ? 0 : 1;
        witnesses += rep.witnesses.size();
        per_R.push_back({{"R", R}, {"strongly_convex", rep.strongly_convex}, {"max_excess", rep.max_excess},
                         {"tolerance", rep.tolerance}, {"probes", rep.probes}, {"enlarged", rep.enlarged}});
        for (const Vec& w : rep.witnesses) {
            if (out.witnesses.size() >= cx.cfg.max_witnesses) break;
            out.witnesses.push_back({{{"check", "out_of_band"}, {"R", R}, {"y", num(w)}},
                                     {{"F_C", num(farthest_distance_finite(C, w, ns).value)}}});
        }
    }
    out.checks.push_back({"max_excess", worst_excess, "<=", tol});
    out.checks.push_back({"out_of_band_witnesses", static_cast<double>(witnesses), "<=", 0.0});
    out.checks.push_back({"not_strongly_convex", static_cast<double>(not_convex), "<=", 0.0});
    out.details["levels"] = per_R;
    return out;
}

struct SuiteSpec {
    InstanceResult (*run)(const Context&);
    std::size_t default_instances;
    double default_h;
    double k_grid;   ///< band = k h + eps with the grid backend
    double k_exact;  ///< ... and with the exact2d backend
    double eps;
    bool euclidean_only;
    const char* note;
};

inline const std::map<std::string, SuiteSpec>& suite_table()
{
    static const std::map<std::string, SuiteSpec> t{
        {"ordrev", {run_ordrev, 100, 0.01, 2, 0, 1e-9, false, "polar(D) in polar(C) and hull(C) in hull(D) for C in D; probes outside the band around the reference boundary"}},
        {"incl", {run_incl, 100, 0.01, 2, 0, 1e-9, false, "every input point inside its hull; value is F_polar(c) - R"}},
        {"triple", {run_triple, 100, 0.01, 2, 0, 1e-9, false, "polar(hull(C)) = polar(C) on probes, band around polar(C)"}},
        {"hull-idem", {run_hull_idem, 100, 0.01, 2, 0, 1e-9, false, "hull(hull(C)) = hull(C) on probes"}},
        {"involution", {run_involution, 100, 0.01, 2, 0, 1e-9, false, "polar(polar(S)) = S for S = polar(C)"}},
        {"ball-polar", {run_ball_polar, 50, 0.01, 2, 2, 1e-9, false, "polar of 64 sphere samples vs B(c, R - r); R < r empty; R = r diameter"}},
        {"ub-farthest", {run_ub_farthest, 50, 0.01, 2, 2, 1e-9, false, "max of F_C - d_polar - R over the probe lattice"}},
        {"gap-bound", {run_gap_bound, 50, 0.01, 4, 4, 1e-9, false, "sup |F_polar - F_C| - R over the probe lattice"}},
        {"farth-polar", {run_farth_polar, 20, 0.02, 2, 2, 1e-9, false, "F_polar vs max distance to grid {F_C <= R}"}},
        {"funct-eq", {run_funct_eq, 20, 0.02, 4, 4, 1e-9, false, "F_C vs F of the intersection of B(z, R) over grid {F_C <= R}"}},
        {"support-sum", {run_support_sum, 25, 0.01, 2, 2, 1e-6, true, "|sigma_C(u) + sigma_polar(-u) - R| over 360 directions"}},
        {"sigma-convex", {run_sigma_convex, 25, 0.01, 2, 2, 1e-9, true, "midpoint convexity violation of R|u| - sigma_C(u)"}},
        {"char-farthest", {run_char_farthest, 3, 0.05, 4, 4, 0.0, false, "Gamma roundtrip within 4h; conditions (a), (b) on their own tolerances"}},
        {"fR-involution", {run_fR_involution, 3, 0.05, 4, 4, 1e-9, false, "(|x| + r)_RR = |x| + r within 4h; (|x| + r)_R = |x| + R - r within 2h"}},
        {"no-strong-convexity", {run_no_strong_convexity, 20, 0.1, 0, 0, 0.0, false, "a strictly negative alpha-gap is required"}},
        {"sublevel-sc", {run_sublevel_sc, 20, 0.02, 4, 2, 0.0, false, "{F_C <= R} strongly convex for three R >= min F_C"}},
    };
    return t;
}

} // namespace suite_detail

inline std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, spec] : suite_detail::suite_table()) out.push_back(name);
    return out;
}

/// Properties accepted by `check` (a subset of the suites).
inline const std::vector<std::string>& check_properties()
{
    static const std::vector<std::string> p{"ordrev", "incl", "triple", "involution", "support-sum", "sigma-convex"};
    return p;
}

/// Runs a verification suite. Instances are generated from
/// instance_seed(seed, index) and run in index order, so the report is a
/// function of the configuration alone.
inline VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg)
{
    const auto& table = suite_detail::suite_table();
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
    const suite_detail::SuiteSpec& spec = it->second;

    const NormSpec ns = cfg.norm == NormKind::lp ? NormSpec::lp(cfg.p, cfg.dim) : NormSpec(cfg.norm, cfg.dim);
    if (spec.euclidean_only && !ns.is_euclidean()) {
        throw Unsupported("suite " + name + " is defined for the Euclidean norm only");
    }
    const HullBackend backend = cfg.backend.value_or(default_backend(ns));
    if (backend == HullBackend::exact2d) detail::require_euclidean_plane(ns, "exact2d backend");
    const double h = cfg.h > 0.0 ? cfg.h : spec.default_h;
    if (!std::isfinite(h)) throw std::invalid_argument("run_suite: h must be finite");

    VerificationReport rep;
    rep.property = name;
    rep.seed = cfg.seed;
    rep.h = h;
    rep.norm = ns;
    rep.backend = to_string(backend);
    rep.budget = {cfg.k.value_or(backend == HullBackend::exact2d ? spec.k_exact : spec.k_grid), cfg.eps.value_or(spec.eps),
                  spec.note};
    rep.config = {{"instances", cfg.instance_seed ? 1 : (cfg.instances ? cfg.instances : spec.default_instances)},
                  {"probes", cfg.probes},
                  {"probe_grid", cfg.probe_grid},
                  {"grid_nodes", cfg.grid_nodes},
                  {"max_points", cfg.max_points},
                  {"alpha", cfg.alpha},
                  {"min_length", cfg.min_length},
                  {"samples", cfg.samples},
                  {"cert_probes", cfg.cert_probes}};
    if (cfg.R) rep.config["R"] = *cfg.R;
    if (cfg.box_half > 0.0) rep.config["box_half"] = cfg.box_half;
    if (cfg.instance_seed) rep.config["instance_seed"] = *cfg.instance_seed;

    const std::size_t count = rep.config["instances"].get<std::size_t>();
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t s = cfg.instance_seed ? *cfg.instance_seed : instance_seed(cfg.seed, i);
        if (name == "fR-involution" && !cfg.instance_seed && i < 3) s = i;
        const suite_detail::Context cx{cfg, ns, backend, h, rep.budget.at(h), s, i};
        InstanceResult r = spec.run(cx);
        r.index = i;
        r.seed = s;
        if (r.h == 0.0) r.h = h;
        rep.instances.push_back(std::move(r));
    }
    return rep;
}

} // namespace ballhull
