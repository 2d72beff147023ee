#pragma once

#include "ballhull/arc_region.hpp"
#include "ballhull/lattice.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>

namespace ballhull {

/// A set given only by a membership predicate and a box containing it.
struct PredicateSet {
    std::function<bool(VecView)> membership;
    Box box;
};

struct EmptySet {};

/// Query value with the resolution it was computed at (0 for exact answers).
struct Measured {
    double value = 0.0;
    double resolution = 0.0;
    bool empty_at_resolution = false;

    bool exact() const { return resolution == 0.0; }
};

/// Uniform query interface over finite sets, balls, ball regions, exact arc
/// regions, and predicate-defined sets.
///
/// Ball regions in the Euclidean plane carry their exact arc structure, so
/// every query on them is exact. Other non-finite sets are answered from grid
/// samples at `resolution()`, which defaults to box diameter / 512 in 2D.
class SetOracle {
public:
    using Rep = std::variant<EmptySet, PointSet, Ball, BallRegion, ArcRegion, PredicateSet>;

    SetOracle(PointSet C, NormSpec ns) : SetOracle(Rep(std::move(C)), std::move(ns)) {}
    SetOracle(Ball B, NormSpec ns) : SetOracle(Rep(std::move(B)), std::move(ns)) {}
    explicit SetOracle(BallRegion B) : SetOracle(Rep(B), B.norm()) {}
    SetOracle(ArcRegion A, NormSpec ns) : SetOracle(Rep(std::move(A)), std::move(ns)) {}
    SetOracle(PredicateSet P, NormSpec ns) : SetOracle(Rep(std::move(P)), std::move(ns)) {}

    static SetOracle empty(NormSpec ns) { return SetOracle(Rep(EmptySet{}), std::move(ns)); }
    static SetOracle whole_space(double R, NormSpec ns)
    {
        const std::size_t n = ns.dim();
        return SetOracle(BallRegion(PointSet(n), R, std::move(ns)));
    }

    const Rep& rep() const { return rep_; }
    const NormSpec& norm() const { return norm_; }
    std::size_t dim() const { return norm_.dim(); }

    /// Exact planar arc structure, when the set has one.
    const ArcRegion* exact2d() const
    {
        if (const auto* a = std::get_if<ArcRegion>(&rep_)) return a;
        return arcs_ ? &*arcs_ : nullptr;
    }

    bool is_empty_exactly() const
    {
        if (std::holds_alternative<EmptySet>(rep_)) return true;
        if (const ArcRegion* a = exact2d()) return a->is_empty();
        if (const auto* B = std::get_if<BallRegion>(&rep_)) return !B->whole_space() && B->bounding_box().empty();
        return false;
    }

    bool is_whole_space() const
    {
        const auto* B = std::get_if<BallRegion>(&rep_);
        return B && B->whole_space();
    }

    bool contains(VecView y, double tol = 1e-9) const
    {
        detail::require_dim(y, dim(), "SetOracle::contains");
        return std::visit(
            [&](const auto& s) -> bool {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, EmptySet>) return false;
                else if constexpr (std::is_same_v<T, PointSet>) return nearest_distance_finite(s, y, norm_).value <= tol;
                else if constexpr (std::is_same_v<T, Ball>) return norm_.distance(y, s.center) <= s.radius + tol;
                else if constexpr (std::is_same_v<T, BallRegion>) return s.contains(y, tol);
                else if constexpr (std::is_same_v<T, ArcRegion>) return s.contains(y, tol);
                else return s.membership(y);
            },
            rep_);
    }

    Box bounding_box() const
    {
        return std::visit(
            [&](const auto& s) -> Box {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, EmptySet>) return {Vec(dim(), 1.0), Vec(dim(), 0.0)};
                else if constexpr (std::is_same_v<T, PointSet>) return s.bounding_box();
                else if constexpr (std::is_same_v<T, Ball>) return Box{s.center, s.center}.expanded(s.radius);
                else if constexpr (std::is_same_v<T, BallRegion>) {
                    if (arcs_) return arcs_->is_empty() ? Box{Vec(2, 1.0), Vec(2, 0.0)} : arcs_->bounding_box();
                    return s.bounding_box();
                } else if constexpr (std::is_same_v<T, ArcRegion>) return s.bounding_box();
                else return s.box;
            },
            rep_);
    }

    /// Grid resolution used by sampled queries.
    double resolution() const
    {
        if (resolution_ > 0.0) return resolution_;
        const Box b = bounding_box();
        return b.empty() ? 1e-3 : default_resolution(b);
    }

    SetOracle with_resolution(double h) const
    {
        if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("SetOracle: resolution must be finite and > 0");
        SetOracle s = *this;
        s.resolution_ = h;
        s.cache_ = std::make_shared<Cache>();
        return s;
    }

    /// Grid sample at resolution(), computed once and shared between copies.
    std::shared_ptr<const GridSample> sample() const
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (!cache_->sample) cache_->sample = std::make_shared<const GridSample>(sample_at(resolution()));
        return cache_->sample;
    }

    GridSample sample_at(double h) const
    {
        if (is_whole_space()) throw std::domain_error("SetOracle: cannot sample the whole space");
        const Box box = bounding_box();
        if (box.empty()) {
            GridSample g;
            g.lattice = Lattice{Vec(dim(), 0.0), h, std::vector<std::size_t>(dim(), 1)};
            g.boundary = g.extremes = PointSet(dim());
            return g;
        }
        const double tol = 1e-12 * (1.0 + box.diameter());
        return sample_lattice(Lattice::covering(box, h), [&](VecView y) { return contains(y, tol); });
    }

private:
    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const GridSample> sample;
    };

    SetOracle(Rep rep, NormSpec ns) : rep_(std::move(rep)), norm_(std::move(ns)), cache_(std::make_shared<Cache>())
    {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, PointSet>) {
                    if (s.empty()) throw std::invalid_argument("SetOracle: empty point set");
                    if (s.dim() != norm_.dim()) throw std::invalid_argument("SetOracle: point dimension differs from norm");
                } else if constexpr (std::is_same_v<T, Ball>) {
                    if (s.dim() != norm_.dim()) throw std::invalid_argument("SetOracle: ball dimension differs from norm");
                } else if constexpr (std::is_same_v<T, BallRegion>) {
                    if (!s.whole_space() && s.norm().is_euclidean() && s.dim() == 2) arcs_ = build_arc_region(s);
                } else if constexpr (std::is_same_v<T, ArcRegion>) {
                    detail::require_euclidean_plane(norm_, "SetOracle(ArcRegion)");
                } else if constexpr (std::is_same_v<T, PredicateSet>) {
                    if (!s.membership) throw std::invalid_argument("SetOracle: missing membership predicate");
                    if (s.box.dim() != norm_.dim()) throw std::invalid_argument("SetOracle: box dimension differs from norm");
                }
            },
            rep_);
    }

    Rep rep_;
    NormSpec norm_;
    std::optional<ArcRegion> arcs_;
    double resolution_ = 0.0;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

inline void require_nonempty_sample(const GridSample& g, const char* what)
{
    if (g.empty()) {
        throw std::domain_error(concat(what, ": set is empty at resolution ", g.resolution()));
    }
}

} // namespace detail

/// d_S(x). Sampled answers are the distance to the nearest boundary sample
/// (0 when x is a member), within about h of the true value.
inline Measured nearest_distance(const SetOracle& S, VecView x)
{
    detail::require_dim(x, S.dim(), "nearest_distance");
    const NormSpec& ns = S.norm();
    if (const ArcRegion* a = S.exact2d()) {
        if (a->is_empty()) return {std::numeric_limits<double>::infinity(), 0.0, true};
        return {a->nearest(x), 0.0, false};
    }
    const auto& rep = S.rep();
    if (std::holds_alternative<EmptySet>(rep)) return {std::numeric_limits<double>::infinity(), 0.0, true};
    if (const auto* C = std::get_if<PointSet>(&rep)) return {nearest_distance_finite(*C, x, ns).value, 0.0, false};
    if (const auto* B = std::get_if<Ball>(&rep)) return {nearest_distance_ball(*B, x, ns), 0.0, false};
    if (S.is_whole_space()) return {0.0, 0.0, false};

    const auto g = S.sample();
    if (g->empty()) return {std::numeric_limits<double>::infinity(), g->resolution(), true};
    if (S.contains(x, 0.0)) return {0.0, g->resolution(), false};
    return {nearest_distance_finite(g->boundary, x, ns).value, g->resolution(), false};
}

/// sigma_S(u) = sup_{z in S} <z, u>.
inline Measured support_function(const SetOracle& S, VecView u)
{
    detail::require_dim(u, S.dim(), "support_function");
    if (const ArcRegion* a = S.exact2d()) {
        if (a->is_empty()) throw std::domain_error("support_function: empty set");
        return {a->support(u), 0.0, false};
    }
    const auto& rep = S.rep();
    if (std::holds_alternative<EmptySet>(rep)) throw std::domain_error("support_function: empty set");
    if (const auto* C = std::get_if<PointSet>(&rep)) return {support_finite(*C, u).value, 0.0, false};
    if (const auto* B = std::get_if<Ball>(&rep)) return {support_ball(*B, u, S.norm()), 0.0, false};
    if (S.is_whole_space()) throw std::domain_error("support_function: unbounded set");

    const auto g = S.sample();
    detail::require_nonempty_sample(*g, "support_function");
    return {support_finite(g->extremes, u).value, g->resolution(), false};
}

/// F_S(x) = sup_{z in S} ||x - z||.
inline Measured farthest_distance(const SetOracle& S, VecView x)
{
    detail::require_dim(x, S.dim(), "farthest_distance");
    const NormSpec& ns = S.norm();
    if (const ArcRegion* a = S.exact2d()) {
        if (a->is_empty()) throw std::domain_error("farthest_distance: empty region");
        return {a->farthest(x), 0.0, false};
    }
    const auto& rep = S.rep();
    if (std::holds_alternative<EmptySet>(rep)) throw std::domain_error("farthest_distance: empty set");
    if (const auto* C = std::get_if<PointSet>(&rep)) return {farthest_distance_finite(*C, x, ns).value, 0.0, false};
    if (const auto* B = std::get_if<Ball>(&rep)) return {farthest_distance_ball(*B, x, ns), 0.0, false};
    if (S.is_whole_space()) throw std::domain_error("farthest_distance: unbounded set");

    const auto g = S.sample();
    detail::require_nonempty_sample(*g, "farthest_distance");
    return {farthest_distance_finite(g->extremes, x, ns).value, g->resolution(), false};
}

/// F over a ball region or an exact arc region.
inline Measured farthest_distance_region(const BallRegion& B, VecView x, double h = 0.0)
{
    SetOracle S(B);
    if (h > 0.0 && !S.exact2d()) S = S.with_resolution(h);
    return farthest_distance(S, x);
}

inline Measured farthest_distance_region(const ArcRegion& A, VecView x)
{
    if (A.is_empty()) throw std::domain_error("farthest_distance_region: empty region");
    return {A.farthest(x), 0.0, false};
}

} // namespace ballhull
