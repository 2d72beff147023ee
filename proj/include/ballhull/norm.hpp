#pragma once

#include "ballhull/core.hpp"

#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace ballhull {

enum class NormKind { euclidean, l1, linf, lp };

inline std::string to_string(NormKind k)
{
    switch (k) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::l1: return "l1";
    case NormKind::linf: return "linf";
    case NormKind::lp: return "lp";
    }
    return "unknown";
}

inline NormKind parse_norm_kind(const std::string& s)
{
    if (s == "euclidean" || s == "l2") return NormKind::euclidean;
    if (s == "l1") return NormKind::l1;
    if (s == "linf") return NormKind::linf;
    if (s == "lp") return NormKind::lp;
    throw std::invalid_argument("unknown norm kind: " + s);
}

/// A norm on R^n together with its dual norm under the Euclidean pairing.
///
/// The dual of an lp norm is the lq norm with 1/p + 1/q = 1, so l1 and linf
/// are dual to each other and the Euclidean norm is self-dual.
class NormSpec {
public:
    NormSpec() = default;

    NormSpec(NormKind kind, std::size_t dim, double p = 2.0)
        : kind_(kind), dim_(dim), p_(p)
    {
        if (dim == 0) {
            throw std::invalid_argument("NormSpec: dimension must be positive");
        }
        if (kind == NormKind::lp && !(p > 1.0 && std::isfinite(p))) {
            throw std::invalid_argument("NormSpec: lp norm requires finite p > 1");
        }
        if (kind == NormKind::euclidean) p_ = 2.0;
        if (kind == NormKind::l1) p_ = 1.0;
        if (kind == NormKind::linf) p_ = std::numeric_limits<double>::infinity();
    }

    static NormSpec euclidean(std::size_t dim) { return {NormKind::euclidean, dim}; }
    static NormSpec l1(std::size_t dim) { return {NormKind::l1, dim}; }
    static NormSpec linf(std::size_t dim) { return {NormKind::linf, dim}; }
    static NormSpec lp(double p, std::size_t dim) { return {NormKind::lp, dim, p}; }

    NormKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    /// Exponent of the norm (1 for l1, 2 for euclidean, +inf for linf).
    double p() const { return p_; }

    bool is_euclidean() const
    {
        return kind_ == NormKind::euclidean || (kind_ == NormKind::lp && p_ == 2.0);
    }

    /// Conjugate exponent q with 1/p + 1/q = 1.
    double dual_exponent() const
    {
        switch (kind_) {
        case NormKind::euclidean: return 2.0;
        case NormKind::l1: return std::numeric_limits<double>::infinity();
        case NormKind::linf: return 1.0;
        case NormKind::lp: return p_ / (p_ - 1.0);
        }
        return 2.0;
    }

    NormSpec dual() const
    {
        switch (kind_) {
        case NormKind::euclidean: return euclidean(dim_);
        case NormKind::l1: return linf(dim_);
        case NormKind::linf: return l1(dim_);
        case NormKind::lp: return lp(dual_exponent(), dim_);
        }
        return *this;
    }

    double eval(VecView x) const
    {
        detail::require_dim(x, dim_, "norm_eval");
        return raw_norm(x, kind_, p_);
    }

    double dual_eval(VecView xstar) const
    {
        detail::require_dim(xstar, dim_, "dual_norm_eval");
        const NormSpec d = dual();
        return raw_norm(xstar, d.kind_, d.p_);
    }

    /// ||a - b|| without allocating.
    double distance(VecView a, VecView b) const
    {
        switch (kind_) {
        case NormKind::euclidean: return euclidean_distance(a, b);
        case NormKind::l1: {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
            return s;
        }
        case NormKind::linf: {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
            return s;
        }
        case NormKind::lp: {
            double buf[8];
            if (a.size() <= 8) {
                for (std::size_t i = 0; i < a.size(); ++i) buf[i] = a[i] - b[i];
                return raw_norm(VecView(buf, a.size()), kind_, p_);
            }
            const Vec d = sub(a, b);
            return raw_norm(d, kind_, p_);
        }
        }
        return 0.0;
    }

    std::string name() const
    {
        if (kind_ == NormKind::lp) {
            std::ostringstream os;
            os << "lp(p=" << p_ << ")";
            return os.str();
        }
        return to_string(kind_);
    }

    friend bool operator==(const NormSpec& a, const NormSpec& b)
    {
        return a.kind_ == b.kind_ && a.dim_ == b.dim_ && (a.kind_ != NormKind::lp || a.p_ == b.p_);
    }

private:
    static double raw_norm(VecView x, NormKind kind, double p)
    {
        switch (kind) {
        case NormKind::euclidean: return euclidean_norm(x);
        case NormKind::l1: {
            double s = 0.0;
            for (double v : x) s += std::abs(v);
            return s;
        }
        case NormKind::linf: {
            double s = 0.0;
            for (double v : x) s = std::max(s, std::abs(v));
            return s;
        }
        case NormKind::lp: {
            if (std::isinf(p)) return raw_norm(x, NormKind::linf, p);
            if (p == 1.0) return raw_norm(x, NormKind::l1, p);
            double m = 0.0;
            for (double v : x) m = std::max(m, std::abs(v));
            if (m == 0.0) return 0.0;
            double s = 0.0;
            for (double v : x) s += std::pow(std::abs(v) / m, p);
            return m * std::pow(s, 1.0 / p);
        }
        }
        return 0.0;
    }

    NormKind kind_ = NormKind::euclidean;
    std::size_t dim_ = 2;
    double p_ = 2.0;
};

enum class SphereSide { primal, dual };
enum class SphereSampling { systematic, random };

/// Unit vectors with respect to the primal or the dual norm of `norm`.
struct DirectionSet {
    std::vector<Vec> directions;
    SphereSide side = SphereSide::primal;
    NormSpec norm;

    std::size_t size() const { return directions.size(); }
    const Vec& operator[](std::size_t i) const { return directions[i]; }
};

namespace detail {

inline Vec rescale_to_sphere(Vec d, const NormSpec& ns, SphereSide side)
{
    const double n = side == SphereSide::primal ? ns.eval(d) : ns.dual_eval(d);
    for (double& v : d) v /= n;
    return d;
}

} // namespace detail

/// Directions on the unit sphere of the primal or dual norm.
///
/// Systematic sampling is defined for dim <= 3: dim 1 alternates +1/-1, dim 2
/// uses the angles 2*pi*j/k, dim 3 a Fibonacci lattice; each direction is then
/// rescaled radially onto the requested sphere. Higher dimensions and random
/// mode use seeded Gaussian directions.
inline DirectionSet unit_sphere_samples(const NormSpec& ns, SphereSide side, std::size_t k,
                                        std::uint64_t seed = 0,
                                        SphereSampling mode = SphereSampling::systematic)
{
    if (k == 0) throw std::invalid_argument("unit_sphere_samples: k must be >= 1");
    DirectionSet out;
    out.side = side;
    out.norm = ns;
    out.directions.reserve(k);
    const std::size_t n = ns.dim();

    if (mode == SphereSampling::systematic && n <= 3) {
        for (std::size_t j = 0; j < k; ++j) {
            Vec d(n);
            if (n == 1) {
                d[0] = (j % 2 == 0) ? 1.0 : -1.0;
            } else if (n == 2) {
                const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
                d[0] = std::cos(a);
                d[1] = std::sin(a);
            } else {
                const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
                const double z = 1.0 - (2.0 * static_cast<double>(j) + 1.0) / static_cast<double>(k);
                const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                const double phi = golden * static_cast<double>(j);
                d[0] = r * std::cos(phi);
                d[1] = r * std::sin(phi);
                d[2] = z;
            }
            out.directions.push_back(detail::rescale_to_sphere(std::move(d), ns, side));
        }
        return out;
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (out.directions.size() < k) {
        Vec d(n);
        double len = 0.0;
        for (double& v : d) {
            v = gauss(rng);
            len += v * v;
        }
        if (len < 1e-24) continue;
        out.directions.push_back(detail::rescale_to_sphere(std::move(d), ns, side));
    }
    return out;
}

} // namespace ballhull
