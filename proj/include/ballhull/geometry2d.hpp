#pragma once

#include "ballhull/sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace ballhull::geo2 {

struct P2 {
    double x = 0.0;
    double y = 0.0;

    friend P2 operator+(P2 a, P2 b) { return {a.x + b.x, a.y + b.y}; }
    friend P2 operator-(P2 a, P2 b) { return {a.x - b.x, a.y - b.y}; }
    friend P2 operator*(double s, P2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(P2 a, P2 b) { return a.x == b.x && a.y == b.y; }
};

inline P2 to_p2(VecView v) { return {v[0], v[1]}; }
inline Vec to_vec(P2 p) { return {p.x, p.y}; }
inline double dot(P2 a, P2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(P2 a, P2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(P2 a) { return std::hypot(a.x, a.y); }
inline double dist(P2 a, P2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
/// Counter-clockwise quarter turn.
inline P2 rot90(P2 a) { return {-a.y, a.x}; }
inline double angle_of(P2 a) { return std::atan2(a.y, a.x); }

/// Wraps an angle into (-pi, pi].
inline double wrap_pi(double a)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

/// Wraps an angle into [0, 2 pi).
inline double wrap_2pi(double a)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a -= two_pi;
    return a;
}

inline std::vector<P2> to_points(const PointSet& s)
{
    if (s.dim() != 2 && !s.empty()) throw std::invalid_argument("expected a planar point set");
    std::vector<P2> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(to_p2(s[i]));
    return out;
}

/// Indices of the convex hull vertices in counter-clockwise order, starting at
/// the lexicographically smallest point. Collinear boundary points and exact
/// duplicates are dropped.
inline std::vector<std::size_t> convex_hull(const std::vector<P2>& pts)
{
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
        return a < b;
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() <= 2) return idx;

    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        return cross(pts[a] - pts[o], pts[b] - pts[o]);
    };
    for (std::size_t i : idx) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
        hull[k++] = i;
    }
    const std::size_t lower = k + 1;
    for (std::size_t j = idx.size() - 1; j-- > 0;) {
        const std::size_t i = idx[j];
        while (k >= lower && turn(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

struct Circle {
    P2 center;
    double radius = 0.0;
};

namespace detail {

inline Circle circle_from(P2 a, P2 b)
{
    const P2 c = 0.5 * (a + b);
    return {c, std::max(dist(c, a), dist(c, b))};
}

inline Circle circle_from(P2 a, P2 b, P2 c)
{
    const P2 ab = b - a;
    const P2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::abs(d) <= 1e-300) {
        // Collinear: the smallest circle spans the farthest pair.
        Circle best = circle_from(a, b);
        for (const Circle& cand : {circle_from(a, c), circle_from(b, c)}) {
            if (cand.radius > best.radius) best = cand;
        }
        return best;
    }
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const P2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    const P2 center = a + off;
    return {center, std::max({dist(center, a), dist(center, b), dist(center, c)})};
}

inline bool inside(const Circle& c, P2 p)
{
    return dist(c.center, p) <= c.radius * (1.0 + 1e-12) + 1e-300;
}

} // namespace detail

/// Smallest enclosing circle (Welzl, iterative form with a fixed shuffle seed).
inline Circle min_enclosing_circle(std::vector<P2> pts)
{
    if (pts.empty()) throw std::domain_error("min_enclosing_circle: empty input");
    std::mt19937_64 rng(0x5eedULL);
    std::shuffle(pts.begin(), pts.end(), rng);
    Circle c{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (detail::inside(c, pts[i])) continue;
        c = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (detail::inside(c, pts[j])) continue;
            c = detail::circle_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (!detail::inside(c, pts[k])) c = detail::circle_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return c;
}

} // namespace ballhull::geo2
