#pragma once

#include "ballhull/geometry2d.hpp"
#include "ballhull/parallel.hpp"
#include "ballhull/sets.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace ballhull {

/// Regular grid lo + i * h, i in [0, counts) per axis, indexed row-major
/// (axis 0 slowest).
struct Lattice {
    Vec lo;
    double h = 0.0;
    std::vector<std::size_t> counts;

    std::size_t dim() const { return lo.size(); }

    std::size_t size() const
    {
        std::size_t n = 1;
        for (std::size_t c : counts) n *= c;
        return n;
    }

    Vec hi() const
    {
        Vec r(lo.size());
        for (std::size_t k = 0; k < lo.size(); ++k) r[k] = lo[k] + h * static_cast<double>(counts[k] - 1);
        return r;
    }

    void unravel(std::size_t flat, std::size_t* idx) const
    {
        for (std::size_t k = counts.size(); k-- > 0;) {
            idx[k] = flat % counts[k];
            flat /= counts[k];
        }
    }

    std::size_t ravel(const std::size_t* idx) const
    {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < counts.size(); ++k) flat = flat * counts[k] + idx[k];
        return flat;
    }

    void node(std::size_t flat, double* out) const
    {
        std::size_t idx[8];
        unravel(flat, idx);
        for (std::size_t k = 0; k < lo.size(); ++k) out[k] = lo[k] + h * static_cast<double>(idx[k]);
    }

    Vec node(std::size_t flat) const
    {
        Vec p(lo.size());
        node(flat, p.data());
        return p;
    }

    /// Smallest lattice anchored at box.lo whose nodes reach box.hi.
    static Lattice covering(const Box& box, double h)
    {
        if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("Lattice: spacing must be finite and > 0");
        if (box.empty()) throw std::domain_error("Lattice: empty box");
        if (box.dim() > 8) throw Unsupported("Lattice: at most 8 dimensions");
        Lattice g{box.lo, h, {}};
        for (std::size_t k = 0; k < box.dim(); ++k) {
            const double span = (box.hi[k] - box.lo[k]) / h;
            g.counts.push_back(static_cast<std::size_t>(std::ceil(span - 1e-9)) + 1);
        }
        return g;
    }
};

/// Default sampling resolution for a bounding box: diameter / 512 in the
/// plane, coarser in 3D and finer on the line.
inline double default_resolution(const Box& box)
{
    const double diam = box.diameter();
    const double divisions = box.dim() == 1 ? 4096.0 : box.dim() == 2 ? 512.0 : 96.0;
    return diam > 0.0 ? diam / divisions : 1e-3;
}

/// Grid samples of a set. `boundary` holds the inside nodes with an axis
/// neighbour outside the set (every extreme point of the sample is among
/// them); `extremes` further reduces to convex hull vertices in 1D/2D.
struct GridSample {
    Lattice lattice;
    std::size_t inside_count = 0;
    PointSet boundary;
    PointSet extremes;

    bool empty() const { return inside_count == 0; }
    double resolution() const { return lattice.h; }
};

/// Points of a finite set that can maximize a convex function over it.
inline PointSet extreme_points(const PointSet& pts)
{
    if (pts.size() <= 2) return pts;
    if (pts.dim() == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        return lo == hi ? pts.subset({lo}) : pts.subset({lo, hi});
    }
    if (pts.dim() == 2) return pts.subset(geo2::convex_hull(geo2::to_points(pts)));
    return pts;
}

template <typename Membership>
GridSample sample_lattice(const Lattice& grid, Membership&& inside)
{
    const std::size_t n = grid.size();
    const std::size_t dim = grid.dim();
    std::vector<std::uint8_t> mask(n, 0);
    parallel_for(n, [&](std::size_t i) {
        double p[8];
        grid.node(i, p);
        mask[i] = inside(VecView(p, dim)) ? 1 : 0;
    });

    GridSample out;
    out.lattice = grid;
    out.boundary = PointSet(dim);
    std::size_t idx[8];
    double p[8];
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask[i]) continue;
        ++out.inside_count;
        grid.unravel(i, idx);
        bool interior = true;
        for (std::size_t k = 0; k < dim && interior; ++k) {
            if (idx[k] == 0 || idx[k] + 1 == grid.counts[k]) {
                interior = false;
                break;
            }
            idx[k] -= 1;
            const bool a = mask[grid.ravel(idx)];
            idx[k] += 2;
            const bool b = mask[grid.ravel(idx)];
            idx[k] -= 1;
            interior = a && b;
        }
        if (!interior) {
            grid.node(i, p);
            out.boundary.push_back(VecView(p, dim));
        }
    }
    out.extremes = extreme_points(out.boundary);
    return out;
}

} // namespace ballhull
