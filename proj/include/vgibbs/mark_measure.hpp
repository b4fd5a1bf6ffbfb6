#ifndef VGIBBS_MARK_MEASURE_HPP
#define VGIBBS_MARK_MEASURE_HPP

#include <memory>

#include "vgibbs/random.hpp"
#include "vgibbs/vec.hpp"

namespace vgibbs {

// Direction law of a mark.  `isotropic` draws uniformly from the sphere;
// `positive_ray` pins every mark to +e1.  The radial law (and hence masses,
// moments and Laplace exponents of |v|) is identical in both modes; the ray
// mode exists so that all pair products <v,v'> are nonnegative, which is the
// regime where the exact-sampling and lower-bound machinery applies verbatim.
enum class MarkDirection { isotropic, positive_ray };

// Infinite mark measure |v|^{-alpha} exp(-|v|^beta) dv on R^d \ {0}, together
// with its eps-truncation used for sampling.  Heavy tables are built once at
// construction and shared, so copies are cheap.
class MarkMeasure {
  public:
    MarkMeasure(int dim, double alpha, double beta, double eps_trunc,
                MarkDirection dir = MarkDirection::isotropic);

    int dim() const;
    double alpha() const;
    double beta() const;
    double eps_trunc() const;
    MarkDirection direction() const;
    double sphere_area() const;  // surface measure of S^{d-1}; equals 2 for d = 1

    // Total mass of { |v| > eps }.  Finite for every eps > 0, infinite at 0.
    double tail_mass(double eps) const;

    // Cached tail_mass(eps_trunc): the intensity of the truncated sampler.
    double tail_intensity() const;

    // n-th absolute moment of the full measure, n >= 1 (n + d - alpha must be
    // positive, otherwise the integral diverges at the origin).
    double moment(int n) const;

    // j-th radial moment restricted to { |v| > eps_trunc }, j >= 0.
    double truncated_radial_moment(int j) const;

    // First absolute moment of the discarded core { |v| <= eps }; this is the
    // knob in truncation-error certificates.
    double first_moment_below(double eps) const;

    // log of the exponential functional r |-> E exp(<h,v> r) - 1 integrated
    // against the full measure; throws DivergentExponentError when the linear
    // growth beats the tail decay.
    double laplace_exponent(const Vec& h, double r) const;
    double psi(const Vec& h, double r) const;  // exp of the above

    // Same with quadratic growth exp(c |v|^2) - 1.
    double quad_laplace_exponent(double c) const;

    // Growth coefficient entering the linear integrability test: |h| r for
    // isotropic marks, max(0, h_1 r) for ray marks.
    double linear_growth(const Vec& h, double r) const;

    void ensure_linear_integrable(const Vec& h, double r) const;
    void ensure_quad_integrable(double c) const;

    // CDF of |v| under the truncated, normalized radial law.
    double radial_cdf(double r) const;

    // Inverse-CDF draw of |v| (tabulated, monotone-interpolated).
    double sample_radius(Rng& rng) const;
    Vec sample_mark(Rng& rng) const;

  private:
    struct Tables;
    std::shared_ptr<const Tables> t_;
};

}  // namespace vgibbs

#endif
