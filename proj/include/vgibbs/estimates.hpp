#ifndef VGIBBS_ESTIMATES_HPP
#define VGIBBS_ESTIMATES_HPP

#include <map>
#include <string>
#include <vector>

#include "vgibbs/specification.hpp"

namespace vgibbs {

// One verified inequality: a Monte Carlo left side, a quadrature right side,
// and the parameters that went into both.
struct BoundReport {
    KernelEstimate lhs;
    double rhs = 0.0;
    std::map<std::string, double> parameters;
    bool pass = false;  // lhs.value - 3 se <= rhs
};

// E exp(beta * tv_mass(Q_k)^2) under the kernel on lam with boundary xi,
// against the closed quadrature bound
//   exp(g^d * quad_exponent(c)) * exp(eps ||phi|| * sum_{j ~ k, j outside lam} tv(xi, Q_j)^2)
// with c = ||phi|| (1 + m_phi / eps).  Requires 0 <= beta <= repulsion(phi)
// and positive-ray marks.  eps_young <= 0 selects the default split
// eps = beta / (2 ||phi||) (with beta replaced by the repulsion constant when
// beta is 0).
BoundReport exp_moment_check(const CubeIndex& k, const Region& lam, const Configuration& xi,
                             const PairPotential& phi, const PoissonSpec& ps, double beta,
                             double eps_young, long n, Rng rng);

// E exp(nu_alpha * sum_k tv_mass(Q_k)^2 e^{-alpha |k|}) on the window lam_K,
// with nu_alpha = beta / sum_k e^{-alpha |k|}, against
//   exp( (1 / (1 - (eps||phi||/beta) e^{alpha theta})) * g^d * quad_exponent(c) ),
// theta = R/g + sqrt(d).  Throws when alpha is too large for the contraction
// factor to exist.  beta <= 0 selects beta = repulsion(phi).
BoundReport temperedness_exp_check(const Region& lam_K, const Configuration& xi,
                                   const PairPotential& phi, const PoissonSpec& ps,
                                   double alpha_temp, double beta, double eps_young, long n,
                                   Rng rng);

struct UniformMomentRow {
    double volume = 0.0;
    KernelEstimate estimate;  // E tv_mass(lam)^order under the kernel on this volume
};

struct UniformMomentReport {
    int order = 0;
    std::vector<UniformMomentRow> rows;
    double max_value = 0.0;
    SlopeFit trend;           // estimate against volume, past halo saturation
    bool trend_pass = false;  // slope not significantly positive
    int saturation_index = 0; // first row whose volume contains lam plus halo
};

// Moments of the mass on a fixed region under kernels on growing volumes;
// the sequence must stabilize rather than grow.
UniformMomentReport uniform_moment_check(const Region& lam, int order,
                                         const std::vector<Region>& growing,
                                         const Configuration& xi, const PairPotential& phi,
                                         const PoissonSpec& ps, long n, Rng rng);

struct DecayRow {
    double threshold = 0.0;
    double sup_prob = 0.0;  // max over the volume sequence of P(mass(probe) > threshold)
    double sigma = 0.0;     // standard error at the maximizing volume
    double cheb_rhs = 0.0;  // Markov bound mean/threshold (+3 sigma), at the same volume
    bool cheb_ok = false;
};

struct DecayReport {
    std::vector<DecayRow> rows;  // thresholds ascending
    double final_threshold_cfg = 0.0;
    bool final_below = false;  // last row's sup_prob under the configured cap
    bool monotone = false;     // sup_prob nonincreasing in the threshold
    bool cheb_all_ok = false;
};

// Tail-event decay: P(mass(probe) > T) for growing T, uniformly over a
// growing volume sequence.  Thresholds share samples per volume, so the
// monotonicity in T is exact by nesting.
DecayReport event_decay_probe(const std::vector<Region>& volumes, const Region& probe,
                              const Configuration& xi, const PairPotential& phi,
                              const PoissonSpec& ps, MassEvent::Stat stat,
                              const std::vector<double>& thresholds, long n, Rng rng,
                              double final_threshold = 0.01);

}  // namespace vgibbs

#endif
