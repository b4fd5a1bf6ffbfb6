#ifndef VGIBBS_VEC_HPP
#define VGIBBS_VEC_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace vgibbs {

// Hard cap on the ambient dimension.  Everything is stored in fixed-size
// arrays so configurations stay contiguous and trivially copyable.
inline constexpr int kMaxDim = 6;

using Vec = std::array<double, kMaxDim>;

inline double dot(const Vec& a, const Vec& b, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a, int dim) { return dot(a, a, dim); }

inline double norm(const Vec& a, int dim) { return std::sqrt(norm2(a, dim)); }

inline double dist(const Vec& a, const Vec& b, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
        double t = a[i] - b[i];
        s += t * t;
    }
    return std::sqrt(s);
}

inline bool finite(const Vec& a, int dim) {
    for (int i = 0; i < dim; ++i)
        if (!std::isfinite(a[i])) return false;
    return true;
}

}  // namespace vgibbs

#endif
