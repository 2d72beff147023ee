#pragma once

#include "ballhull/grid_function.hpp"
#include "ballhull/set_oracle.hpp"

#include <random>

namespace ballhull {

namespace detail {

/// Node coordinates of f's grid, flattened, with the indices of finite values.
struct NodeTable {
    std::vector<double> coords;
    std::vector<std::size_t> finite;
    std::size_t dim = 0;

    explicit NodeTable(const GridFunction& f) : dim(f.dim())
    {
        coords.resize(f.size() * dim);
        for (std::size_t i = 0; i < f.size(); ++i) {
            f.lattice().node(i, coords.data() + i * dim);
            if (!is_inf_sentinel(f.value(i))) finite.push_back(i);
        }
    }

    VecView operator[](std::size_t i) const { return VecView(coords.data() + i * dim, dim); }
};

} // namespace detail

/// max over grid nodes x of <x, xstar> - f(x): the conjugate with the
/// supremum truncated to the grid.
inline double conjugate_at(const GridFunction& f, const detail::NodeTable& nodes, VecView xstar)
{
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i : nodes.finite) best = std::max(best, dot(nodes[i], xstar) - f.value(i));
    return best;
}

inline double conjugate_at(const GridFunction& f, VecView xstar)
{
    detail::require_dim(xstar, f.dim(), "conjugate_at");
    return conjugate_at(f, detail::NodeTable(f), xstar);
}

/// Conjugate sampled on the grid of dual_box with spacing dual_h. The
/// supremum runs over f's grid only; for Lipschitz f its sampling error at x*
/// is at most h ||x*||_* plus the truncation to the box.
inline GridFunction fenchel_conjugate(const GridFunction& f, const Box& dual_box, double dual_h)
{
    const detail::NodeTable nodes(f);
    if (nodes.finite.empty()) throw std::domain_error("fenchel_conjugate: f is +inf everywhere");
    return GridFunction::sample(dual_box, dual_h, f.norm(), [&](VecView xs) { return conjugate_at(f, nodes, xs); });
}

/// Bound h ||x*||_* on the grid sampling error of the conjugate at x*.
inline double conjugate_error_bound(const GridFunction& f, VecView xstar) { return f.h() * f.norm().dual_eval(xstar); }

/// eta(x*) = ||x*||_* f*(x* / ||x*||_*), and 0 at the origin.
inline double eta(const GridFunction& f, const detail::NodeTable& nodes, VecView xstar)
{
    const double t = f.norm().dual_eval(xstar);
    if (t == 0.0) return 0.0;
    const Vec u = scale(xstar, 1.0 / t);
    return t * conjugate_at(f, nodes, u);
}

inline double eta(const GridFunction& f, VecView xstar)
{
    detail::require_dim(xstar, f.dim(), "eta");
    return eta(f, detail::NodeTable(f), xstar);
}

/// Uniform random probes in the box shrunk by `margin` on every side.
inline PointSet random_probes(const Box& box, std::size_t count, std::uint64_t seed, double margin = 0.0)
{
    std::mt19937_64 rng(seed);
    PointSet out(box.dim());
    Vec p(box.dim());
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < box.dim(); ++k) {
            const double lo = box.lo[k] + margin, hi = box.hi[k] - margin;
            p[k] = lo < hi ? std::uniform_real_distribution<double>(lo, hi)(rng) : 0.5 * (box.lo[k] + box.hi[k]);
        }
        out.push_back(p);
    }
    return out;
}

struct ConditionAReport {
    PointSet probes;              ///< probes actually used (after shrinking into the box)
    std::vector<double> estimates; ///< max directional difference quotient per probe
    double eps = 0.0;
    double tol_a = 0.0;
    std::size_t shrunk = 0; ///< probes moved inside the box
    std::size_t certified = 0;

    bool all_certified() const { return certified == estimates.size(); }
};

/// Surrogate for "the subdifferential meets the dual unit sphere": at each
/// probe x, max over k primal-unit d of (f(x + eps d) - f(x)) / eps should be
/// 1 within tol_a = 2 eps + 2h / eps (default eps = 4h).
inline ConditionAReport check_condition_a(const GridFunction& f, const PointSet& probes, std::size_t k = 64,
                                          double eps = 0.0)
{
    if (probes.dim() != f.dim()) throw std::invalid_argument("check_condition_a: probe dimension differs");
    ConditionAReport rep;
    rep.eps = eps > 0.0 ? eps : 4.0 * f.h();
    rep.tol_a = 2.0 * rep.eps + 2.0 * f.h() / rep.eps;
    const DirectionSet dirs = unit_sphere_samples(f.norm(), SphereSide::primal, k, 0);

    // every step x + eps d stays in the box when x is eps * max|d_i| inside it
    double reach = 0.0;
    for (const Vec& d : dirs.directions) {
        for (double v : d) reach = std::max(reach, std::abs(v));
    }
    const Box inner = f.box().expanded(-rep.eps * reach);
    if (inner.empty()) throw std::invalid_argument("check_condition_a: eps too large for the box");

    rep.probes = PointSet(f.dim());
    Vec x(f.dim());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        bool moved = false;
        for (std::size_t j = 0; j < f.dim(); ++j) {
            x[j] = std::clamp(probes[i][j], inner.lo[j], inner.hi[j]);
            moved = moved || x[j] != probes[i][j];
        }
        rep.shrunk += moved ? 1 : 0;
        rep.probes.push_back(x);
    }
    rep.estimates.assign(rep.probes.size(), 0.0);
    parallel_for(
        rep.probes.size(),
        [&](std::size_t i) {
            const VecView p = rep.probes[i];
            const double fx = f(p);
            double best = -std::numeric_limits<double>::infinity();
            for (const Vec& d : dirs.directions) best = std::max(best, (f(axpy(p, rep.eps, d)) - fx) / rep.eps);
            rep.estimates[i] = best;
        },
        16);
    for (double e : rep.estimates) rep.certified += std::abs(e - 1.0) <= rep.tol_a ? 1 : 0;
    return rep;
}

struct ConditionBReport {
    double worst_gap = std::numeric_limits<double>::infinity(); ///< min of eta(mid) - (eta(u) + eta(v)) / 2
    bool finite = true;
    std::size_t pairs = 0;
    Vec u;
    Vec v;
    double tol_b = 0.0;

    bool certified() const { return finite && worst_gap >= -tol_b; }
};

/// Randomized midpoint concavity test of eta on pairs of dual vectors with
/// dual norms in [0.5, 1.5]. Default tol_b is 2h.
inline ConditionBReport check_condition_b(const GridFunction& f, std::size_t pair_count = 10000,
                                          std::uint64_t seed = 0, double tol_b = -1.0)
{
    ConditionBReport rep;
    rep.pairs = pair_count;
    rep.tol_b = tol_b >= 0.0 ? tol_b : 2.0 * f.h();
    const detail::NodeTable nodes(f);
    const DirectionSet dirs =
        unit_sphere_samples(f.norm(), SphereSide::dual, 2 * pair_count, seed, SphereSampling::random);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::vector<Vec> us(pair_count), vs(pair_count);
    for (std::size_t i = 0; i < pair_count; ++i) {
        us[i] = scale(dirs[2 * i], mag(rng));
        vs[i] = scale(dirs[2 * i + 1], mag(rng));
    }
    std::vector<double> gaps(pair_count);
    std::vector<char> fin(pair_count, 1);
    parallel_for(
        pair_count,
        [&](std::size_t i) {
            const double a = eta(f, nodes, us[i]);
            const double b = eta(f, nodes, vs[i]);
            const double m = eta(f, nodes, midpoint(us[i], vs[i]));
            fin[i] = std::isfinite(a) && std::isfinite(b) && std::isfinite(m) && std::abs(a) < kInfThreshold &&
                     std::abs(b) < kInfThreshold && std::abs(m) < kInfThreshold;
            gaps[i] = m - 0.5 * (a + b);
        },
        64);
    for (std::size_t i = 0; i < pair_count; ++i) {
        rep.finite = rep.finite && fin[i];
        if (gaps[i] < rep.worst_gap) {
            rep.worst_gap = gaps[i];
            rep.u = us[i];
            rep.v = vs[i];
        }
    }
    return rep;
}

/// Gamma_f = {c : ||x - c|| <= f(x) for every grid node x} (within tol), as a
/// set oracle sampled at f's spacing. Since |x_i - c_i| <= ||x - c||, Gamma_f
/// lies in the intersection of the boxes x +- f(x); an empty intersection is
/// reported as the empty set.
inline SetOracle gamma_recover(const GridFunction& f, double tol = -1.0)
{
    const NormSpec ns = f.norm();
    auto nodes = std::make_shared<const detail::NodeTable>(f);
    const double tl = tol >= 0.0 ? tol : 1e-12 * (1.0 + std::abs(f.max_finite_value()));
    Box box = Box::cube(f.dim(), -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
    for (std::size_t i : nodes->finite) {
        const double r = f.value(i);
        const VecView x = (*nodes)[i];
        for (std::size_t k = 0; k < f.dim(); ++k) {
            box.lo[k] = std::max(box.lo[k], x[k] - r);
            box.hi[k] = std::min(box.hi[k], x[k] + r);
        }
    }
    if (nodes->finite.empty() || box.empty()) return SetOracle::empty(ns);
    auto values = std::make_shared<const std::vector<double>>(f.values());
    PredicateSet P{[nodes, values, ns, tl](VecView c) {
                       for (std::size_t i : nodes->finite) {
                           if (ns.distance((*nodes)[i], c) - (*values)[i] > tl) return false;
                       }
                       return true;
                   },
                   box};
    return SetOracle(std::move(P), ns).with_resolution(f.h());
}

/// sup over grid nodes |F_Gamma(x) - f(x)|, with F_Gamma taken over the grid
/// sample of Gamma. Infinite when Gamma is empty at resolution.
inline double gamma_roundtrip_error(const GridFunction& f, const SetOracle& gamma)
{
    if (std::holds_alternative<EmptySet>(gamma.rep())) return std::numeric_limits<double>::infinity();
    const auto g = gamma.sample();
    if (g->empty()) return std::numeric_limits<double>::infinity();
    std::vector<double> err(f.size(), 0.0);
    parallel_for(f.size(), [&](std::size_t i) {
        if (is_inf_sentinel(f.value(i))) return;
        const Vec x = f.node(i);
        err[i] = std::abs(farthest_distance_finite(g->extremes, x, f.norm()).value - f.value(i));
    });
    return *std::max_element(err.begin(), err.end());
}

struct FarthestCertificate {
    ConditionAReport cond_a;
    ConditionBReport cond_b;
    SetOracle gamma_set;
    double roundtrip_error = 0.0;
    double roundtrip_tol = 0.0;

    bool certified() const
    {
        return cond_a.all_certified() && cond_b.certified() && roundtrip_error <= roundtrip_tol;
    }
};

/// Conditions (a) and (b) on probes plus the Gamma_f roundtrip. The verdict
/// covers the probe set and sampled pairs only.
inline FarthestCertificate certify_farthest(const GridFunction& f, std::size_t probe_count = 100,
                                            std::uint64_t seed = 0, std::size_t pair_count = 10000)
{
    FarthestCertificate cert{.cond_a = check_condition_a(f, random_probes(f.box(), probe_count, seed)),
                             .cond_b = check_condition_b(f, pair_count, seed + 1),
                             .gamma_set = gamma_recover(f)};
    cert.roundtrip_error = gamma_roundtrip_error(f, cert.gamma_set);
    cert.roundtrip_tol = 4.0 * f.h();
    return cert;
}

/// Grid nodes of {f <= R} reduced to the points that can maximize a convex
/// function over them.
inline PointSet sublevel_extremes(const GridFunction& f, double R)
{
    PointSet pts(f.dim());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.value(i) <= R) pts.push_back(f.node(i));
    }
    if (pts.empty()) {
        throw std::domain_error(
            detail::concat("sublevel set {f <= ", R, "} is empty on the grid (min f = ", f.min_value(), ")"));
    }
    return extreme_points(pts);
}

/// max{||y - x|| : f(x) <= R} over the grid nodes x.
inline double farthest_over_sublevel(const GridFunction& f, double R, VecView y)
{
    detail::require_dim(y, f.dim(), "farthest_over_sublevel");
    return farthest_distance_finite(sublevel_extremes(f, R), y, f.norm()).value;
}

/// f_R(y) = max{||y - x|| : f(x) <= R} on f's grid.
inline GridFunction transform_fR(const GridFunction& f, double R)
{
    if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("transform_fR: R must be finite and > 0");
    const PointSet ext = sublevel_extremes(f, R);
    return GridFunction::sample(f.box(), f.h(), f.norm(),
                                [&](VecView y) { return farthest_distance_finite(ext, y, f.norm()).value; });
}

/// (1 - l) f(x) + l f(y) - alpha l (1 - l) ||x - y||_2^2 - f((1 - l) x + l y).
inline double alpha_convexity_gap(const GridFunction& f, VecView x, VecView y, double lambda, double alpha)
{
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("alpha_convexity_gap: lambda must be in [0, 1]");
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha_convexity_gap: alpha must be > 0");
    const double d = euclidean_distance(x, y);
    Vec z(x.size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = (1.0 - lambda) * x[k] + lambda * y[k];
    return (1.0 - lambda) * f(x) + lambda * f(y) - alpha * lambda * (1.0 - lambda) * d * d - f(z);
}

struct AlphaGapSearch {
    double worst_gap = std::numeric_limits<double>::infinity();
    Vec x;
    Vec y;
    double lambda = 0.0;
    std::size_t samples = 0;
    std::size_t negatives = 0; ///< gaps below -tol
    double tol = 0.0;
};

/// Random search for alpha-convexity violations on segments of Euclidean
/// length >= min_length. Segments are node-aligned: x, y and the point at
/// lambda = j / m are grid nodes, so f is never interpolated. A gap counts as
/// negative below -tol, tol = 1e-9 (1 + |values|) by default.
inline AlphaGapSearch alpha_gap_search(const GridFunction& f, double alpha, double min_length, std::size_t samples,
                                       std::uint64_t seed, double tol = -1.0)
{
    const Lattice& L = f.lattice();
    const std::size_t n = f.dim();
    std::mt19937_64 rng(seed);
    AlphaGapSearch out;
    std::size_t ix[8], iy[8], iz[8];
    long s[8];
    std::size_t attempts = 0;
    while (out.samples < samples && attempts < 1000 * samples) {
        ++attempts;
        const long m = std::uniform_int_distribution<long>(2, 16)(rng);
        double len2 = 0.0;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            const long span = static_cast<long>(L.counts[k] - 1) / m;
            s[k] = std::uniform_int_distribution<long>(-span, span)(rng);
            const long need = std::abs(s[k]) * m;
            const long room = static_cast<long>(L.counts[k] - 1) - need;
            if (room < 0) ok = false;
            else {
                const long start = std::uniform_int_distribution<long>(0, room)(rng);
                ix[k] = static_cast<std::size_t>(s[k] >= 0 ? start : start + need);
                iy[k] = static_cast<std::size_t>(static_cast<long>(ix[k]) + s[k] * m);
            }
            len2 += std::pow(static_cast<double>(s[k] * m) * L.h, 2);
        }
        if (!ok || std::sqrt(len2) < min_length) continue;
        const long j = std::uniform_int_distribution<long>(1, m - 1)(rng);
        for (std::size_t k = 0; k < n; ++k) iz[k] = static_cast<std::size_t>(static_cast<long>(ix[k]) + s[k] * j);
        const double fx = f.value(L.ravel(ix)), fy = f.value(L.ravel(iy)), fz = f.value(L.ravel(iz));
        if (is_inf_sentinel(fx) || is_inf_sentinel(fy) || is_inf_sentinel(fz)) continue;
        const double lam = static_cast<double>(j) / static_cast<double>(m);
        const double gap = (1.0 - lam) * fx + lam * fy - alpha * lam * (1.0 - lam) * len2 - fz;
        const double t = tol >= 0.0 ? tol : 1e-9 * (1.0 + std::abs(fx) + std::abs(fy) + std::abs(fz));
        out.tol = std::max(out.tol, t);
        if (gap < -t) ++out.negatives;
        if (gap < out.worst_gap) {
            out.worst_gap = gap;
            out.lambda = lam;
            out.x = L.node(L.ravel(ix));
            out.y = L.node(L.ravel(iy));
        }
        ++out.samples;
    }
    return out;
}

/// F_S sampled on the grid of box with spacing h.
inline GridFunction farthest_field(const SetOracle& S, const Box& box, double h)
{
    return GridFunction::sample(box, h, S.norm(), [&](VecView x) { return farthest_distance(S, x).value; });
}

} // namespace ballhull
