#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ballhull {

using Vec = std::vector<double>;
using VecView = std::span<const double>;

// Values at or above this threshold are treated as +infinity (conjugate
// indicators); reports print them as "inf".
inline constexpr double kInfSentinel = 1e300;
inline constexpr double kInfThreshold = 1e299;

inline bool is_inf_sentinel(double v) { return v >= kInfThreshold; }

/// Raised when an operation is not defined for the given norm or dimension.
class Unsupported : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

template <typename... Parts>
std::string concat(const Parts&... parts)
{
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

inline void require_dim(VecView x, std::size_t dim, const char* what)
{
    if (x.size() != dim) {
        throw std::invalid_argument(
            concat(what, ": dimension mismatch (got ", x.size(), ", expected ", dim, ")"));
    }
}

inline void require_finite(VecView x, const char* what)
{
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(concat(what, ": non-finite coordinate"));
        }
    }
}

} // namespace detail

inline double dot(VecView a, VecView b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline Vec add(VecView a, VecView b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

inline Vec sub(VecView a, VecView b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

inline Vec scale(VecView a, double s)
{
    Vec r(a.begin(), a.end());
    for (double& v : r) {
        v *= s;
    }
    return r;
}

/// a + s * b
inline Vec axpy(VecView a, double s, VecView b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + s * b[i];
    }
    return r;
}

inline Vec midpoint(VecView a, VecView b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = 0.5 * (a[i] + b[i]);
    }
    return r;
}

inline double euclidean_norm(VecView a)
{
    return std::sqrt(dot(a, a));
}

inline double euclidean_distance(VecView a, VecView b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace ballhull
