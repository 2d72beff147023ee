#pragma once

#include "ballhull/io.hpp"

#include <random>

namespace ballhull {

enum class InstanceKind { points, ball, hull };

inline InstanceKind parse_instance_kind(const std::string& s)
{
    if (s == "points") return InstanceKind::points;
    if (s == "ball") return InstanceKind::ball;
    if (s == "hull") return InstanceKind::hull;
    throw std::invalid_argument("unknown instance kind \"" + s + "\" (expected points|ball|hull)");
}

struct InstanceParams {
    NormKind norm = NormKind::euclidean;
    double p = 2.0;
    std::size_t dim = 2;
    std::size_t min_points = 3;
    std::size_t max_points = 30;
    double coord_lo = -1.0;
    double coord_hi = 1.0;
    double R_lo = 1.0;
    double R_hi = 2.0;
    /// hull instances: allow diam(C) <= 2R, keeping only draws whose polar
    /// is nonempty.
    bool allow_diam_2R = false;
};

/// Seeds for the instances of a run: SplitMix64 of (seed, index), so one
/// instance can be regenerated from its own seed.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace detail {

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform point of the norm ball B(center, r), by rejection from its box.
inline Vec sample_in_ball(std::mt19937_64& rng, const NormSpec& ns, VecView center, double r)
{
    Vec p(ns.dim()), d(ns.dim());
    for (;;) {
        for (std::size_t k = 0; k < ns.dim(); ++k) d[k] = uniform(rng, -r, r);
        if (ns.eval(d) <= r) break;
    }
    for (std::size_t k = 0; k < ns.dim(); ++k) p[k] = center[k] + d[k];
    return p;
}

/// Whether the radius-R polar of C is nonempty: exactly in the Euclidean
/// plane, else on a grid fine enough to resolve it.
inline bool polar_nonempty(const PointSet& C, double R, const NormSpec& ns)
{
    const BallRegion P(C, R, ns);
    if (ns.is_euclidean() && ns.dim() == 2) return !build_arc_region(P).is_empty();
    const Box b = P.bounding_box();
    if (b.empty()) return false;
    const double h = std::max(default_resolution(b), 1e-6 * R);
    return !SetOracle(P).with_resolution(h).sample()->empty();
}

} // namespace detail

inline NormSpec instance_norm(const InstanceParams& p)
{
    return p.norm == NormKind::lp ? NormSpec::lp(p.p, p.dim) : NormSpec(p.norm, p.dim);
}

/// Reproducible random scene with one set and a radius R drawn from the R
/// range. points: uniform points in the coordinate box. ball: a ball with
/// center in the box and radius in the R range. hull: points with
/// diam(C) <= R (or <= 2R with a nonempty polar when allowed).
inline Scene generate_instance(InstanceKind kind, std::uint64_t seed, const InstanceParams& p)
{
    if (p.dim < 1 || p.dim > 3) throw std::invalid_argument("generate_instance: dim must be 1, 2 or 3");
    if (p.min_points < 1 || p.min_points > p.max_points) throw std::invalid_argument("generate_instance: bad point count range");
    if (!(p.coord_lo <= p.coord_hi)) throw std::invalid_argument("generate_instance: empty coordinate range");
    if (!(p.R_lo > 0.0) || !(p.R_lo <= p.R_hi) || !std::isfinite(p.R_hi)) {
        throw std::invalid_argument("generate_instance: R range must satisfy 0 < R_lo <= R_hi < inf");
    }
    const NormSpec ns = instance_norm(p);
    std::mt19937_64 rng(seed);
    Scene sc;
    sc.norm = ns;
    sc.R = detail::uniform(rng, p.R_lo, p.R_hi);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(p.min_points, p.max_points)(rng);
    Vec center(p.dim);
    for (double& c : center) c = detail::uniform(rng, p.coord_lo, p.coord_hi);

    SetDescriptor s;
    switch (kind) {
    case InstanceKind::points: {
        s.points = PointSet(p.dim);
        Vec q(p.dim);
        for (std::size_t i = 0; i < n; ++i) {
            for (double& c : q) c = detail::uniform(rng, p.coord_lo, p.coord_hi);
            s.points.push_back(q);
        }
        break;
    }
    case InstanceKind::ball:
        s.kind = SetKind::ball;
        s.center = center;
        s.radius = detail::uniform(rng, p.R_lo, p.R_hi);
        break;
    case InstanceKind::hull: {
        const double R = *sc.R;
        const double reach = p.allow_diam_2R ? R : 0.5 * R;
        for (int attempt = 0;; ++attempt) {
            if (attempt == 1000) throw std::invalid_argument("generate_instance: no feasible hull instance in 1000 draws");
            s.points = PointSet(p.dim);
            for (std::size_t i = 0; i < n; ++i) s.points.push_back(detail::sample_in_ball(rng, ns, center, reach));
            if (!p.allow_diam_2R || detail::polar_nonempty(s.points, R, ns)) break;
        }
        break;
    }
    }
    sc.sets.push_back(std::move(s));
    return sc;
}

} // namespace ballhull
