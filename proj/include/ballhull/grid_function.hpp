#pragma once

#include "ballhull/lattice.hpp"

#include <json.hpp>

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <string>

namespace ballhull {

enum class ExtendMode { reject, lipschitz_extend };

/// Scalar field on the grid lo + i h covering an axis-aligned box exactly.
///
/// Values are stored row-major (axis 0 slowest) and evaluated off-grid by
/// multilinear interpolation. A value >= kInfThreshold stands for +infinity
/// and makes every interpolated value it touches infinite.
class GridFunction {
public:
    GridFunction() = default;

    GridFunction(Box box, double h, NormSpec norm, std::vector<double> values = {})
        : box_(std::move(box)), norm_(std::move(norm))
    {
        if (box_.dim() != norm_.dim()) throw std::invalid_argument("GridFunction: box dimension differs from norm");
        if (box_.empty()) throw std::invalid_argument("GridFunction: empty box");
        if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("GridFunction: spacing must be finite and > 0");
        lattice_.lo = box_.lo;
        lattice_.h = h;
        for (std::size_t k = 0; k < box_.dim(); ++k) {
            const double steps = (box_.hi[k] - box_.lo[k]) / h;
            const double whole = std::round(steps);
            if (std::abs(steps - whole) > 1e-9 * std::max(1.0, whole)) {
                throw std::invalid_argument(
                    detail::concat("GridFunction: (hi - lo) / h = ", steps, " is not an integer on axis ", k));
            }
            lattice_.counts.push_back(static_cast<std::size_t>(whole) + 1);
        }
        if (values.empty()) values.assign(lattice_.size(), 0.0);
        if (values.size() != lattice_.size()) {
            throw std::invalid_argument(detail::concat("GridFunction: expected ", lattice_.size(), " values, got ",
                                                       values.size()));
        }
        for (double& v : values) {
            if (std::isnan(v)) throw std::invalid_argument("GridFunction: NaN value");
            if (v >= kInfThreshold) v = kInfSentinel;
            if (v <= -kInfThreshold) throw std::invalid_argument("GridFunction: -inf value");
        }
        values_ = std::move(values);
    }

    template <typename Fn>
    static GridFunction sample(const Box& box, double h, const NormSpec& norm, Fn&& fn)
    {
        GridFunction g(box, h, norm);
        parallel_for(g.size(), [&](std::size_t i) {
            double p[8];
            g.lattice_.node(i, p);
            g.values_[i] = fn(VecView(p, g.dim()));
        });
        g.validate_values();
        return g;
    }

    const Box& box() const { return box_; }
    double h() const { return lattice_.h; }
    const NormSpec& norm() const { return norm_; }
    std::size_t dim() const { return box_.dim(); }
    const Lattice& lattice() const { return lattice_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double value(std::size_t i) const { return values_[i]; }
    Vec node(std::size_t i) const { return lattice_.node(i); }
    ExtendMode extend_mode() const { return extend_; }

    GridFunction with_extend_mode(ExtendMode m) const
    {
        GridFunction g = *this;
        g.extend_ = m;
        return g;
    }

    GridFunction with_values(std::vector<double> v) const
    {
        GridFunction g(box_, lattice_.h, norm_, std::move(v));
        g.extend_ = extend_;
        return g;
    }

    double min_value() const { return *std::min_element(values_.begin(), values_.end()); }

    double max_finite_value() const
    {
        double m = -std::numeric_limits<double>::infinity();
        for (double v : values_) {
            if (!is_inf_sentinel(v)) m = std::max(m, v);
        }
        return m;
    }

    /// Multilinear interpolation inside the box; outside, either an error or
    /// the value at the nearest box point plus the distance to it.
    double operator()(VecView x) const
    {
        detail::require_dim(x, dim(), "GridFunction");
        if (!box_.contains(x, 1e-12 * (1.0 + box_.diameter()))) {
            if (extend_ == ExtendMode::reject) {
                throw std::domain_error("GridFunction: evaluation point outside the box");
            }
            double p[8];
            for (std::size_t k = 0; k < dim(); ++k) p[k] = std::clamp(x[k], box_.lo[k], box_.hi[k]);
            const VecView q(p, dim());
            const double v = interpolate(q);
            return is_inf_sentinel(v) ? kInfSentinel : v + norm_.distance(x, q);
        }
        return interpolate(x);
    }

private:
    void validate_values()
    {
        for (double& v : values_) {
            if (std::isnan(v)) throw std::domain_error("GridFunction: function returned NaN");
            if (v >= kInfThreshold || v == std::numeric_limits<double>::infinity()) v = kInfSentinel;
        }
    }

    double interpolate(VecView x) const
    {
        const std::size_t n = dim();
        std::size_t base[8];
        double frac[8];
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t cnt = lattice_.counts[k];
            if (cnt == 1) {
                base[k] = 0;
                frac[k] = 0.0;
                continue;
            }
            const double t = std::clamp((x[k] - lattice_.lo[k]) / lattice_.h, 0.0, static_cast<double>(cnt - 1));
            base[k] = std::min(static_cast<std::size_t>(t), cnt - 2);
            frac[k] = t - static_cast<double>(base[k]);
        }
        double acc = 0.0;
        std::size_t idx[8];
        for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
            double w = 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                const bool up = (corner >> k) & 1U;
                idx[k] = base[k] + (up ? 1 : 0);
                w *= up ? frac[k] : 1.0 - frac[k];
            }
            if (w == 0.0) continue;
            const double v = values_[lattice_.ravel(idx)];
            if (is_inf_sentinel(v)) return kInfSentinel;
            acc += w * v;
        }
        return acc;
    }

    Box box_;
    Lattice lattice_;
    NormSpec norm_;
    std::vector<double> values_;
    ExtendMode extend_ = ExtendMode::reject;
};

// JSON encodings shared by the file formats.

inline nlohmann::json norm_to_json(const NormSpec& ns)
{
    nlohmann::json j{{"kind", to_string(ns.kind())}, {"dim", ns.dim()}};
    if (ns.kind() == NormKind::lp) j["p"] = ns.p();
    return j;
}

inline NormSpec norm_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw std::invalid_argument("norm: expected an object");
    const NormKind kind = parse_norm_kind(j.at("kind").get<std::string>());
    const auto dim = j.at("dim").get<std::size_t>();
    if (kind == NormKind::lp) return NormSpec::lp(j.at("p").get<double>(), dim);
    return NormSpec(kind, dim);
}

enum class PayloadFormat { csv, binary };

/// Writes a one-line JSON header followed by the values, either as CSV (one
/// line per run of the last axis, "inf" for the sentinel) or as raw
/// little-endian float64.
inline void write_grid_function(std::ostream& out, const GridFunction& f, PayloadFormat fmt = PayloadFormat::csv)
{
    const nlohmann::json header{{"box", {{"lo", f.box().lo}, {"hi", f.box().hi}}},
                                {"h", f.h()},
                                {"norm", norm_to_json(f.norm())},
                                {"shape", f.lattice().counts},
                                {"payload", fmt == PayloadFormat::csv ? "csv" : "binary"}};
    out << header.dump() << '\n';
    if (fmt == PayloadFormat::binary) {
        static_assert(std::endian::native == std::endian::little, "binary payload assumes a little-endian host");
        out.write(reinterpret_cast<const char*>(f.values().data()),
                  static_cast<std::streamsize>(f.values().size() * sizeof(double)));
        return;
    }
    const std::size_t row = f.lattice().counts.back();
    char buf[32];
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = f.value(i);
        if (is_inf_sentinel(v)) {
            out << "inf";
        } else {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << buf;
        }
        out << ((i + 1) % row == 0 ? '\n' : ',');
    }
}

inline void save_grid_function(const std::string& path, const GridFunction& f, PayloadFormat fmt = PayloadFormat::csv)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_grid_function(out, f, fmt);
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline GridFunction read_grid_function(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("grid function: missing header");
    const nlohmann::json header = nlohmann::json::parse(line);
    const Box box{header.at("box").at("lo").get<Vec>(), header.at("box").at("hi").get<Vec>()};
    const GridFunction shape(box, header.at("h").get<double>(), norm_from_json(header.at("norm")));
    const std::string payload = header.value("payload", "csv");
    std::vector<double> values(shape.size());
    if (payload == "binary") {
        in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(values.size() * sizeof(double)));
        if (in.gcount() != static_cast<std::streamsize>(values.size() * sizeof(double))) {
            throw std::invalid_argument("grid function: truncated binary payload");
        }
    } else if (payload == "csv") {
        std::size_t i = 0;
        std::string cell;
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            while (std::getline(ss, cell, ',')) {
                if (cell.empty() || cell == "\r") continue;
                if (i >= values.size()) throw std::invalid_argument("grid function: too many values");
                if (cell.rfind("inf", 0) == 0) {
                    values[i++] = kInfSentinel;
                } else {
                    std::size_t used = 0;
                    values[i++] = std::stod(cell, &used);
                }
            }
        }
        if (i != values.size()) {
            throw std::invalid_argument(detail::concat("grid function: expected ", values.size(), " values, got ", i));
        }
    } else {
        throw std::invalid_argument("grid function: unknown payload " + payload);
    }
    return shape.with_values(std::move(values));
}

inline GridFunction load_grid_function(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_grid_function(in);
}

} // namespace ballhull
