#include "vgibbs/mark_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "vgibbs/errors.hpp"
#include "vgibbs/geometry.hpp"
#include "vgibbs/quadrature.hpp"
#include "vgibbs/stats.hpp"

namespace vgibbs {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kExpArgMax = 690.0;  // past this exp() is useless anyway

double checked_exp(double x) {
    if (x > kExpArgMax)
        throw std::overflow_error("mark measure: exponent too large to evaluate in doubles");
    return std::exp(x);
}

// Sphere average of exp(c u_1) over the unit sphere S^{d-1}, times exp(-c).
// Bounded by 1 for c >= 0, so safe at any c.
double sphere_avg_scaled(double c, int d) {
    if (c == 0.0) return 1.0;
    if (d == 1) return 0.5 * (1.0 + std::exp(-2.0 * c));
    if (d == 3) {
        // (1 - e^{-2c}) / (2c)
        return -std::expm1(-2.0 * c) / (2.0 * c);
    }
    // C_d * int_0^pi exp(c (cos t - 1)) sin^{d-2} t dt
    const double cd = std::exp(std::lgamma(0.5 * d) - std::lgamma(0.5 * (d - 1))) / std::sqrt(kPi);
    QuadControl qc;
    qc.rel_tol = 1e-12;
    double val = integrate(
        [c, d](double t) {
            return std::exp(c * (std::cos(t) - 1.0)) * std::pow(std::sin(t), d - 2);
        },
        0.0, kPi, qc);
    return cd * val;
}

// Sphere average of exp(c u_1) minus one.  Series near zero avoids the
// cancellation, the scaled form avoids the overflow.
double sphere_avg_minus1(double c, int d) {
    c = std::abs(c);  // the average is even in c
    if (c < 1e-3) {
        const double dd = static_cast<double>(d);
        double c2 = c * c;
        return c2 / (2.0 * dd) + c2 * c2 / (8.0 * dd * (dd + 2.0)) +
               c2 * c2 * c2 / (48.0 * dd * (dd + 2.0) * (dd + 4.0));
    }
    return std::expm1(c + std::log(sphere_avg_scaled(c, d)));
}

// int_0^B rho^q G(rho) drho with q > -1 and G smooth; substitutes rho = t^m
// so the integrand vanishes like t^2 at the origin.
template <class G>
double power_sub_integral(double q, double B, G g, double rel_tol) {
    if (!(q > -1.0)) throw std::domain_error("power_sub_integral: q must exceed -1");
    int m = std::max(1, static_cast<int>(std::ceil(3.0 / (1.0 + q))));
    double mm = static_cast<double>(m);
    double top = std::pow(B, 1.0 / mm);
    QuadControl qc;
    qc.rel_tol = rel_tol;
    return mm * integrate(
                    [q, mm, &g](double t) {
                        if (t <= 0.0) return 0.0;
                        double rho = std::pow(t, mm);
                        return std::pow(t, mm * (q + 1.0) - 1.0) * g(rho);
                    },
                    0.0, top, qc);
}

}  // namespace

struct MarkMeasure::Tables {
    int dim;
    double alpha;
    double beta;
    double eps;
    MarkDirection dir;
    double s_area;       // S_{d-1}
    double trunc_total;  // tail_mass(eps)

    // dense cumulative of the unnormalized radial weight on [eps, r_max]
    std::vector<double> grid_r;
    std::vector<double> grid_cum;
    double grid_total = 0.0;

    // inverse-CDF knots at u_j = j/(K-1), with monotone hermite slopes
    std::vector<double> knot_r;
    std::vector<double> knot_m;

    double p() const { return static_cast<double>(dim) - 1.0 - alpha; }

    double weight(double rho) const { return std::pow(rho, p()) * std::exp(-std::pow(rho, beta)); }

    // int_lo^inf rho^{p+j} e^{-rho^beta} drho (no sphere factor)
    double radial_tail_integral(int j, double lo, double rel_tol = 1e-11) const {
        const double q = p() + static_cast<double>(j);
        const double b = beta;
        QuadControl qc;
        qc.rel_tol = rel_tol;
        double total = 0.0;
        double mid = std::max(1.0, lo);
        if (lo < mid) {
            // log substitution tames rho^q near the lower end
            total += integrate(
                [q, b](double u) {
                    return std::exp((q + 1.0) * u - std::exp(b * u));
                },
                std::log(lo), std::log(mid), qc);
        }
        total += integrate_to_inf(
            [q, b](double rho) { return std::pow(rho, q) * std::exp(-std::pow(rho, b)); }, mid,
            qc);
        return total;
    }
};

MarkMeasure::MarkMeasure(int dim, double alpha, double beta, double eps_trunc, MarkDirection dir) {
    if (dim < 1 || dim > kMaxDim) throw std::domain_error("MarkMeasure: dim out of range");
    if (!std::isfinite(alpha) || alpha < static_cast<double>(dim) ||
        alpha >= static_cast<double>(dim) + 1.0)
        throw std::domain_error("MarkMeasure: alpha must lie in [d, d+1)");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::domain_error("MarkMeasure: beta must be positive and finite");
    if (!(eps_trunc > 0.0) || !std::isfinite(eps_trunc))
        throw std::domain_error("MarkMeasure: eps_trunc must be positive and finite");

    auto t = std::make_shared<Tables>();
    t->dim = dim;
    t->alpha = alpha;
    t->beta = beta;
    t->eps = eps_trunc;
    t->dir = dir;
    t->s_area = static_cast<double>(dim) * unit_ball_volume(dim);
    t->trunc_total = t->s_area * t->radial_tail_integral(0, eps_trunc);

    // Build the sampling tables.  First find where the tail becomes
    // negligible, then lay a log-spaced cumulative over [eps, r_max].
    double hi = std::max(4.0, 2.0 * eps_trunc);
    const double base = t->radial_tail_integral(0, eps_trunc);
    while (hi < 1e9 && t->radial_tail_integral(0, hi, 1e-6) > 1e-15 * base) hi *= 2.0;

    const int n_cells = 16384;
    t->grid_r.resize(n_cells + 1);
    t->grid_cum.resize(n_cells + 1);
    const double ratio = std::log(hi / eps_trunc);
    for (int i = 0; i <= n_cells; ++i)
        t->grid_r[i] = eps_trunc * std::exp(ratio * static_cast<double>(i) / n_cells);
    t->grid_r[0] = eps_trunc;
    t->grid_r[n_cells] = hi;
    KahanSum cum;
    t->grid_cum[0] = 0.0;
    for (int i = 0; i < n_cells; ++i) {
        auto panel = quad_detail::gk15([&t](double r) { return t->weight(r); }, t->grid_r[i],
                                       t->grid_r[i + 1]);
        cum.add(std::max(0.0, panel.value));
        t->grid_cum[i + 1] = cum.value();
    }
    t->grid_total = t->grid_cum[n_cells];

    const int n_knots = 2048;
    t->knot_r.resize(n_knots);
    std::size_t cell = 0;
    for (int j = 0; j < n_knots; ++j) {
        double target = t->grid_total * static_cast<double>(j) / (n_knots - 1);
        while (cell + 1 < t->grid_cum.size() - 1 && t->grid_cum[cell + 1] < target) ++cell;
        double c0 = t->grid_cum[cell], c1 = t->grid_cum[cell + 1];
        double frac = c1 > c0 ? (target - c0) / (c1 - c0) : 0.0;
        t->knot_r[j] = t->grid_r[cell] + frac * (t->grid_r[cell + 1] - t->grid_r[cell]);
    }
    t->knot_r[0] = eps_trunc;
    t->knot_r[n_knots - 1] = hi;

    // Fritsch-Butland slopes on the uniform u-grid keep the interpolant
    // monotone, so sampled radii respect the CDF ordering exactly.
    t->knot_m.assign(n_knots, 0.0);
    const double h = 1.0 / (n_knots - 1);
    std::vector<double> sec(n_knots - 1);
    for (int j = 0; j + 1 < n_knots; ++j) sec[j] = (t->knot_r[j + 1] - t->knot_r[j]) / h;
    t->knot_m[0] = sec.front();
    t->knot_m[n_knots - 1] = sec.back();
    for (int j = 1; j + 1 < n_knots; ++j) {
        double a = sec[j - 1], b = sec[j];
        t->knot_m[j] = (a > 0.0 && b > 0.0) ? 2.0 * a * b / (a + b) : 0.0;
    }

    t_ = std::move(t);
}

int MarkMeasure::dim() const { return t_->dim; }
double MarkMeasure::alpha() const { return t_->alpha; }
double MarkMeasure::beta() const { return t_->beta; }
double MarkMeasure::eps_trunc() const { return t_->eps; }
MarkDirection MarkMeasure::direction() const { return t_->dir; }
double MarkMeasure::sphere_area() const { return t_->s_area; }
double MarkMeasure::tail_intensity() const { return t_->trunc_total; }

double MarkMeasure::tail_mass(double eps) const {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("tail_mass: eps must be positive (mass diverges at the origin)");
    return t_->s_area * t_->radial_tail_integral(0, eps);
}

double MarkMeasure::moment(int n) const {
    if (n < 0) throw std::domain_error("moment: order must be nonnegative");
    const double q = static_cast<double>(n) + t_->p();
    if (!(q > -1.0))
        throw std::domain_error("moment: diverges at the origin (n + d - alpha <= 0)");
    const double b = t_->beta;
    double core = power_sub_integral(q, 1.0, [b](double rho) { return std::exp(-std::pow(rho, b)); },
                                     1e-11);
    double tail = integrate_to_inf(
        [q, b](double rho) { return std::pow(rho, q) * std::exp(-std::pow(rho, b)); }, 1.0,
        QuadControl{});
    return t_->s_area * (core + tail);
}

double MarkMeasure::truncated_radial_moment(int j) const {
    if (j < 0) throw std::domain_error("truncated_radial_moment: order must be nonnegative");
    return t_->s_area * t_->radial_tail_integral(j, t_->eps);
}

double MarkMeasure::first_moment_below(double eps) const {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::domain_error("first_moment_below: eps must be positive");
    const double q = static_cast<double>(t_->dim) - t_->alpha;  // in (-1, 0]
    const double b = t_->beta;
    return t_->s_area * power_sub_integral(
                            q, eps, [b](double rho) { return std::exp(-std::pow(rho, b)); }, 1e-11);
}

double MarkMeasure::linear_growth(const Vec& h, double r) const {
    if (t_->dir == MarkDirection::positive_ray) return std::max(0.0, h[0] * r);
    return norm(h, t_->dim) * std::abs(r);
}

void MarkMeasure::ensure_linear_integrable(const Vec& h, double r) const {
    const double kappa = linear_growth(h, r);
    if (kappa == 0.0 || t_->beta > 1.0 || (t_->beta == 1.0 && kappa < 1.0)) return;
    throw DivergentExponentError(
        "laplace exponent diverges: linear growth " + std::to_string(kappa) +
        " is not dominated by tail decay with beta = " + std::to_string(t_->beta));
}

void MarkMeasure::ensure_quad_integrable(double c) const {
    if (c <= 0.0 || t_->beta > 2.0 || (t_->beta == 2.0 && c < 1.0)) return;
    throw DivergentExponentError(
        "quadratic exponential moment diverges: coefficient " + std::to_string(c) +
        " is not dominated by tail decay with beta = " + std::to_string(t_->beta));
}

double MarkMeasure::laplace_exponent(const Vec& h, double r) const {
    ensure_linear_integrable(h, r);
    const int d = t_->dim;
    const double b = t_->beta;
    const bool ray = t_->dir == MarkDirection::positive_ray;
    const double kappa = ray ? h[0] * r : norm(h, d) * std::abs(r);  // signed for ray marks
    if (kappa == 0.0) return 0.0;

    double core, tail;
    if (ray) {
        // integrand rho^{d-1-alpha} (e^{kappa rho} - 1) e^{-rho^beta}
        const double q = static_cast<double>(d) - t_->alpha;  // in (-1, 0]
        core = power_sub_integral(
            q, 1.0,
            [kappa, b](double rho) {
                return std::expm1(kappa * rho) / rho * std::exp(-std::pow(rho, b));
            },
            1e-10);
        tail = integrate_to_inf(
            [this, kappa, b](double rho) {
                double decay = std::pow(rho, b);
                return std::pow(rho, t_->p()) *
                       (checked_exp(kappa * rho - decay) - std::exp(-decay));
            },
            1.0, QuadControl{1e-11, 0.0, 52});
    } else {
        // sphere-averaged: rho^{d-1-alpha} (A_d(kappa rho) - 1) e^{-rho^beta}
        const double q = static_cast<double>(d) + 1.0 - t_->alpha;  // in (0, 1]
        core = power_sub_integral(
            q, 1.0,
            [kappa, b, d](double rho) {
                return sphere_avg_minus1(kappa * rho, d) / (rho * rho) *
                       std::exp(-std::pow(rho, b));
            },
            1e-10);
        tail = integrate_to_inf(
            [this, kappa, b, d](double rho) {
                double c = kappa * rho;
                double decay = std::pow(rho, b);
                return std::pow(rho, t_->p()) *
                       (sphere_avg_scaled(c, d) * checked_exp(c - decay) - std::exp(-decay));
            },
            1.0, QuadControl{1e-11, 0.0, 52});
    }
    return t_->s_area * (core + tail);
}

double MarkMeasure::psi(const Vec& h, double r) const { return checked_exp(laplace_exponent(h, r)); }

double MarkMeasure::quad_laplace_exponent(double c) const {
    ensure_quad_integrable(c);
    if (c == 0.0) return 0.0;
    const double b = t_->beta;
    const double q = static_cast<double>(t_->dim) + 1.0 - t_->alpha;  // in (0, 1]
    double core = power_sub_integral(
        q, 1.0,
        [c, b](double rho) {
            return std::expm1(c * rho * rho) / (rho * rho) * std::exp(-std::pow(rho, b));
        },
        1e-10);
    double tail = integrate_to_inf(
        [this, c, b](double rho) {
            double decay = std::pow(rho, b);
            return std::pow(rho, t_->p()) * (checked_exp(c * rho * rho - decay) - std::exp(-decay));
        },
        1.0, QuadControl{1e-11, 0.0, 52});
    return t_->s_area * (core + tail);
}

double MarkMeasure::radial_cdf(double r) const {
    const auto& g = *t_;
    if (r <= g.grid_r.front()) return 0.0;
    if (r >= g.grid_r.back()) return 1.0;
    auto it = std::upper_bound(g.grid_r.begin(), g.grid_r.end(), r);
    std::size_t i = static_cast<std::size_t>(it - g.grid_r.begin()) - 1;
    double r0 = g.grid_r[i], r1 = g.grid_r[i + 1];
    double frac = (r - r0) / (r1 - r0);
    double c = g.grid_cum[i] + frac * (g.grid_cum[i + 1] - g.grid_cum[i]);
    return c / g.grid_total;
}

double MarkMeasure::sample_radius(Rng& rng) const {
    const auto& g = *t_;
    const std::size_t K = g.knot_r.size();
    double u = rng.uniform01();
    double pos = u * static_cast<double>(K - 1);
    std::size_t j = std::min(K - 2, static_cast<std::size_t>(pos));
    double s = pos - static_cast<double>(j);  // in [0,1)
    const double h = 1.0 / static_cast<double>(K - 1);
    // cubic hermite basis
    double s2 = s * s, s3 = s2 * s;
    double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    return h00 * g.knot_r[j] + h10 * h * g.knot_m[j] + h01 * g.knot_r[j + 1] +
           h11 * h * g.knot_m[j + 1];
}

Vec MarkMeasure::sample_mark(Rng& rng) const {
    double rho = sample_radius(rng);
    Vec v{};
    if (t_->dir == MarkDirection::positive_ray) {
        v[0] = rho;
        return v;
    }
    Vec u = rng.on_sphere(t_->dim);
    for (int i = 0; i < t_->dim; ++i) v[i] = rho * u[i];
    return v;
}

}  // namespace vgibbs
