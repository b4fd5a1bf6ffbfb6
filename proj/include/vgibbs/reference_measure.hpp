#ifndef VGIBBS_REFERENCE_MEASURE_HPP
#define VGIBBS_REFERENCE_MEASURE_HPP

#include <cstdint>

#include "vgibbs/configuration.hpp"
#include "vgibbs/geometry.hpp"
#include "vgibbs/mark_measure.hpp"
#include "vgibbs/random.hpp"

namespace vgibbs {

// Marked Poisson reference measure on a finite cube window: atom count per
// cube is Poisson(tail_intensity * cube volume), positions uniform in the
// cube, marks drawn from the truncated mark measure.
struct PoissonSpec {
    PartitionSpec part;
    MarkMeasure marks;
    Region window;

    PoissonSpec(PartitionSpec p, MarkMeasure m, Region w);

    double intensity_per_volume() const { return marks.tail_intensity(); }
    double expected_count() const { return marks.tail_intensity() * window.volume(part); }

    // Same model, different window.
    PoissonSpec on(Region w) const { return PoissonSpec(part, marks, std::move(w)); }
};

Configuration sample_poisson(const PoissonSpec& ps, Rng& rng);

// A Monte Carlo scalar with its provenance: stream id of the RNG that
// produced it and a certified bound on the truncation part of the error
// (zero when the target itself is defined within the truncated model).
struct KernelEstimate {
    double value = 0.0;
    double se = 0.0;
    long n_samples = 0;
    std::uint64_t stream = 0;
    double trunc_bound = 0.0;
};

struct LaplaceValue {
    double value;        // exponential formula for the untruncated measure
    double trunc_bound;  // certified |truncated - untruncated| bound
};

// E exp(<h, eta(psi)>) in closed form (product over cubes of the exponential
// formula).  Throws DivergentExponentError when some cube's exponent is
// infinite.
LaplaceValue laplace_closed_form(const PoissonSpec& ps, const Vec& h, const CubeFunction& psi);

// Monte Carlo counterpart under the truncated sampler.
KernelEstimate empirical_laplace(const PoissonSpec& ps, const Vec& h, const CubeFunction& psi,
                                 long n, Rng rng);

struct MomentBoundCheck {
    double lhs = 0.0;  // empirical E |<h, eta(psi)>|^n
    double lhs_se = 0.0;
    double rhs = 0.0;  // n! * sup_cube Psi^n * max(1, |window|)^n
    long order = 0;
    bool pass = false;
};

MomentBoundCheck moment_bound_check(const PoissonSpec& ps, const Vec& h, const CubeFunction& psi,
                                    int order, long n_samples, Rng rng);

// Exact moments of tv_mass(window) under the truncated reference measure
// (compound Poisson; cumulant j is |window| * truncated_radial_moment(j)).
// Supports order <= 4.
double poisson_tv_moment(const PoissonSpec& ps, const Region& region, int order);

}  // namespace vgibbs

#endif
