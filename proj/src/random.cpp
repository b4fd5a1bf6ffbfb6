#include "vgibbs/random.hpp"

#include <cmath>
#include <stdexcept>

namespace vgibbs {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Marsaglia polar method
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

long Rng::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::domain_error("poisson: mean must be finite and >= 0");
    long n = 0;
    // Split large means into chunks so exp(-mu) stays well away from
    // underflow; a sum of independent Poissons is Poisson.
    while (mean > 30.0) {
        n += poisson(30.0);
        mean -= 30.0;
    }
    if (mean == 0.0) return n;
    const double limit = std::exp(-mean);
    double prod = 1.0;
    long k = 0;
    do {
        ++k;
        prod *= uniform01();
    } while (prod > limit);
    return n + (k - 1);
}

Vec Rng::on_sphere(int dim) {
    Vec u{};
    if (dim == 1) {
        u[0] = (raw() & 1ull) ? 1.0 : -1.0;
        return u;
    }
    double r2;
    do {
        r2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            u[i] = gaussian();
            r2 += u[i] * u[i];
        }
    } while (r2 < 1e-300);
    double inv = 1.0 / std::sqrt(r2);
    for (int i = 0; i < dim; ++i) u[i] *= inv;
    return u;
}

}  // namespace vgibbs
