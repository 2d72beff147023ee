#pragma once

#include "ballhull/core.hpp"
#include "ballhull/norm.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace ballhull {

/// Axis-aligned box [lo, hi]. A box with lo[i] > hi[i] for some i is empty.
struct Box {
    Vec lo;
    Vec hi;

    std::size_t dim() const { return lo.size(); }

    bool empty() const
    {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (lo[i] > hi[i]) return true;
        }
        return false;
    }

    bool contains(VecView x, double tol = 0.0) const
    {
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
        }
        return true;
    }

    double diameter() const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            const double e = std::max(0.0, hi[i] - lo[i]);
            s += e * e;
        }
        return std::sqrt(s);
    }

    Vec center() const { return midpoint(lo, hi); }

    Box expanded(double margin) const
    {
        Box b = *this;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            b.lo[i] -= margin;
            b.hi[i] += margin;
        }
        return b;
    }

    Box intersect(const Box& o) const
    {
        Box b = *this;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            b.lo[i] = std::max(lo[i], o.lo[i]);
            b.hi[i] = std::min(hi[i], o.hi[i]);
        }
        return b;
    }

    Box hull(const Box& o) const
    {
        Box b = *this;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            b.lo[i] = std::min(lo[i], o.lo[i]);
            b.hi[i] = std::max(hi[i], o.hi[i]);
        }
        return b;
    }

    static Box cube(std::size_t dim, double lo, double hi) { return {Vec(dim, lo), Vec(dim, hi)}; }
};

/// Finite set of points in R^n stored contiguously.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}

    PointSet(const std::vector<Vec>& points)
    {
        if (points.empty()) {
            throw std::invalid_argument("PointSet: use PointSet(dim) for an empty set");
        }
        dim_ = points.front().size();
        if (dim_ == 0) throw std::invalid_argument("PointSet: zero-dimensional points");
        coords_.reserve(points.size() * dim_);
        for (const auto& p : points) push_back(p);
    }

    PointSet(std::initializer_list<Vec> points) : PointSet(std::vector<Vec>(points)) {}

    static PointSet from_flat(std::size_t dim, std::vector<double> coords)
    {
        if (dim == 0 || coords.size() % dim != 0) {
            throw std::invalid_argument("PointSet::from_flat: size is not a multiple of dim");
        }
        detail::require_finite(coords, "PointSet");
        PointSet s(dim);
        s.coords_ = std::move(coords);
        return s;
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const { return coords_.empty(); }

    VecView operator[](std::size_t i) const { return VecView(coords_.data() + i * dim_, dim_); }
    Vec point(std::size_t i) const
    {
        const auto v = (*this)[i];
        return Vec(v.begin(), v.end());
    }

    void push_back(VecView p)
    {
        detail::require_dim(p, dim_, "PointSet::push_back");
        detail::require_finite(p, "PointSet");
        coords_.insert(coords_.end(), p.begin(), p.end());
    }

    void reserve(std::size_t n) { coords_.reserve(n * dim_); }

    const std::vector<double>& flat() const { return coords_; }

    std::vector<Vec> points() const
    {
        std::vector<Vec> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
        return out;
    }

    Box bounding_box() const
    {
        if (empty()) throw std::domain_error("PointSet::bounding_box: empty set");
        Box b{point(0), point(0)};
        for (std::size_t i = 1; i < size(); ++i) {
            const auto p = (*this)[i];
            for (std::size_t k = 0; k < dim_; ++k) {
                b.lo[k] = std::min(b.lo[k], p[k]);
                b.hi[k] = std::max(b.hi[k], p[k]);
            }
        }
        return b;
    }

    /// Copy with exact-duplicate points removed; first occurrences keep their order.
    PointSet deduplicated() const
    {
        std::vector<std::size_t> order(size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        auto less = [this](std::size_t a, std::size_t b) {
            const auto pa = (*this)[a];
            const auto pb = (*this)[b];
            if (std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end())) return true;
            if (std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end())) return false;
            return a < b;
        };
        std::sort(order.begin(), order.end(), less);
        std::vector<char> keep(size(), 1);
        for (std::size_t i = 1; i < order.size(); ++i) {
            const auto a = (*this)[order[i - 1]];
            const auto b = (*this)[order[i]];
            if (std::equal(a.begin(), a.end(), b.begin())) keep[order[i]] = 0;
        }
        PointSet out(dim_);
        for (std::size_t i = 0; i < size(); ++i) {
            if (keep[i]) out.coords_.insert(out.coords_.end(), coords_.begin() + i * dim_, coords_.begin() + (i + 1) * dim_);
        }
        return out;
    }

    PointSet subset(const std::vector<std::size_t>& indices) const
    {
        PointSet out(dim_);
        out.reserve(indices.size());
        for (std::size_t i : indices) out.coords_.insert(out.coords_.end(), coords_.begin() + i * dim_, coords_.begin() + (i + 1) * dim_);
        return out;
    }

    PointSet merged(const PointSet& other) const
    {
        if (other.dim_ != dim_) throw std::invalid_argument("PointSet::merged: dimension mismatch");
        PointSet out = *this;
        out.coords_.insert(out.coords_.end(), other.coords_.begin(), other.coords_.end());
        return out;
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

/// Closed ball B(center, radius).
struct Ball {
    Vec center;
    double radius = 0.0;

    Ball() = default;
    Ball(Vec c, double r) : center(std::move(c)), radius(r)
    {
        detail::require_finite(center, "Ball");
        if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("Ball: radius must be finite and >= 0");
    }

    std::size_t dim() const { return center.size(); }
};

/// Value of a farthest/nearest query over a finite set plus the index of the
/// point attaining it (lowest index among ties).
struct IndexedDistance {
    double value = 0.0;
    std::size_t witness = 0;
};

/// F_C(x) = max_{c in C} ||x - c||.
inline IndexedDistance farthest_distance_finite(const PointSet& C, VecView x, const NormSpec& ns)
{
    if (C.empty()) throw std::domain_error("farthest_distance_finite: empty point set");
    detail::require_dim(x, C.dim(), "farthest_distance_finite");
    IndexedDistance best{-1.0, 0};
    for (std::size_t i = 0; i < C.size(); ++i) {
        const double d = ns.distance(x, C[i]);
        if (d > best.value) best = {d, i};
    }
    return best;
}

/// d_C(x) = min_{c in C} ||x - c||.
inline IndexedDistance nearest_distance_finite(const PointSet& C, VecView x, const NormSpec& ns)
{
    if (C.empty()) throw std::domain_error("nearest_distance_finite: empty point set");
    detail::require_dim(x, C.dim(), "nearest_distance_finite");
    IndexedDistance best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < C.size(); ++i) {
        const double d = ns.distance(x, C[i]);
        if (d < best.value) best = {d, i};
    }
    return best;
}

/// sigma_C(u) = max_{c in C} <c, u>.
inline IndexedDistance support_finite(const PointSet& C, VecView u)
{
    if (C.empty()) throw std::domain_error("support_finite: empty point set");
    detail::require_dim(u, C.dim(), "support_finite");
    IndexedDistance best{-std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < C.size(); ++i) {
        const double s = dot(C[i], u);
        if (s > best.value) best = {s, i};
    }
    return best;
}

/// max_{||v - c|| <= r} ||x - v|| = ||x - c|| + r, for every norm.
inline double farthest_distance_ball(const Ball& B, VecView x, const NormSpec& ns)
{
    detail::require_dim(x, B.dim(), "farthest_distance_ball");
    return ns.distance(x, B.center) + B.radius;
}

inline double nearest_distance_ball(const Ball& B, VecView x, const NormSpec& ns)
{
    detail::require_dim(x, B.dim(), "nearest_distance_ball");
    return std::max(0.0, ns.distance(x, B.center) - B.radius);
}

/// sigma_B(u) = <c, u> + r ||u||_*.
inline double support_ball(const Ball& B, VecView u, const NormSpec& ns)
{
    return dot(B.center, u) + B.radius * ns.dual_eval(u);
}

/// The intersection of the balls B(g, R) over the generators g.
///
/// An empty generator set represents the whole space (empty intersection).
/// Membership is the identity y in region <=> F_G(y) <= R.
class BallRegion {
public:
    BallRegion() = default;

    BallRegion(PointSet generators, double radius, NormSpec norm)
        : generators_(std::move(generators)), radius_(radius), norm_(std::move(norm))
    {
        if (!(radius > 0.0) || !std::isfinite(radius)) {
            throw std::invalid_argument("BallRegion: radius must be finite and > 0");
        }
        if (generators_.dim() != 0 && generators_.dim() != norm_.dim()) {
            throw std::invalid_argument("BallRegion: generator dimension differs from norm dimension");
        }
    }

    const PointSet& generators() const { return generators_; }
    double radius() const { return radius_; }
    const NormSpec& norm() const { return norm_; }
    std::size_t dim() const { return norm_.dim(); }
    bool whole_space() const { return generators_.empty(); }

    bool contains(VecView y, double tol = 0.0) const
    {
        if (generators_.empty()) return true;
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            if (norm_.distance(y, generators_[i]) > radius_ + tol) return false;
        }
        return true;
    }

    /// max_g ||y - g|| - R (<= 0 exactly on the region).
    double level(VecView y) const
    {
        return farthest_distance_finite(generators_, y, norm_).value - radius_;
    }

    /// Intersection of the boxes g +- R. |x_i| <= ||x|| holds for every
    /// supported norm, so the box contains the region. An empty box certifies
    /// an empty region.
    Box bounding_box() const
    {
        if (generators_.empty()) throw std::domain_error("BallRegion::bounding_box: region is the whole space");
        Box b = Box::cube(dim(), -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto g = generators_[i];
            for (std::size_t k = 0; k < dim(); ++k) {
                b.lo[k] = std::max(b.lo[k], g[k] - radius_);
                b.hi[k] = std::min(b.hi[k], g[k] + radius_);
            }
        }
        return b;
    }

private:
    PointSet generators_;
    double radius_ = 1.0;
    NormSpec norm_;
};

} // namespace ballhull
