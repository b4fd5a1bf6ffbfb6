#include "vgibbs/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vgibbs/errors.hpp"

namespace vgibbs {

namespace {

double index_norm(const CubeIndex& k, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i)
        s += static_cast<double>(k.k[i]) * static_cast<double>(k.k[i]);
    return std::sqrt(s);
}

// Young-split parameter: saturate eps ||phi|| = beta / 2.  When beta is zero
// the bound is still stated with the largest certified coefficient, so fall
// back to the repulsion constant; a zero potential needs no split at all.
double default_eps(double beta, const PairPotential& phi) {
    double sup = phi.sup_norm();
    if (sup == 0.0) return 1.0;
    double b = beta > 0.0 ? beta : phi.repulsion();
    if (b <= 0.0) return 1.0;
    return 0.5 * b / sup;
}

void require_positive_regime(const PoissonSpec& ps) {
    if (ps.marks.direction() != MarkDirection::positive_ray)
        throw std::domain_error(
            "bound checks require the nonnegative-product mark regime (positive_ray)");
}

}  // namespace

BoundReport exp_moment_check(const CubeIndex& k, const Region& lam, const Configuration& xi,
                             const PairPotential& phi, const PoissonSpec& ps, double beta,
                             double eps_young, long n, Rng rng) {
    require_positive_regime(ps);
    if (!lam.contains(k)) throw std::domain_error("exp_moment_check: cube not inside the volume");
    const double A = phi.repulsion();
    if (!(beta >= 0.0) || beta > A * (1.0 + 1e-12))
        throw std::domain_error("exp_moment_check: beta must lie in [0, repulsion]");
    // The right side is uniform over beta in [0, repulsion], so the split must
    // not depend on the probe beta either.
    double eps = eps_young > 0.0 ? eps_young : default_eps(0.0, phi);

    const double sup = phi.sup_norm();
    const double m_phi = interaction_parameter(ps.part);
    const double c = sup * (1.0 + m_phi / eps);
    ps.marks.ensure_quad_integrable(c);  // names the violated condition on failure

    // right side: volume term over the one cube, boundary term over its
    // interacting cubes outside lam
    double quad = ps.marks.quad_laplace_exponent(c);
    double rhs_exp = ps.part.cube_volume() * quad;
    Region nb = neighbor_cubes(k, ps.part);
    double xi_sq = 0.0;
    for (const auto& j : nb) {
        if (lam.contains(j)) continue;
        double m = tv_mass(xi, Region(std::vector<CubeIndex>{j}), ps.part);
        xi_sq += m * m;
    }
    rhs_exp += eps * sup * xi_sq;

    BoundReport rep;
    rep.rhs = std::exp(rhs_exp);

    Region cube_region(std::vector<CubeIndex>{k});
    MeanVar mv;
    for (long i = 0; i < n; ++i) {
        GibbsSample s = sample_gibbs_rejection(lam, xi, phi, ps, rng);
        double m = tv_mass(s.config, cube_region, ps.part);
        mv.add(std::exp(beta * m * m));
    }
    rep.lhs.value = mv.mean();
    rep.lhs.se = mv.stderror();
    rep.lhs.n_samples = n;
    rep.lhs.stream = rng.stream_id();
    rep.lhs.trunc_bound = 0.0;
    rep.parameters = {{"beta", beta},
                      {"eps", eps},
                      {"sup_norm", sup},
                      {"repulsion", A},
                      {"m_phi", m_phi},
                      {"c_quad", c},
                      {"quad_exponent", quad},
                      {"boundary_mass_sq", xi_sq}};
    rep.pass = rep.lhs.value - 3.0 * rep.lhs.se <= rep.rhs;
    return rep;
}

BoundReport temperedness_exp_check(const Region& lam_K, const Configuration& xi,
                                   const PairPotential& phi, const PoissonSpec& ps,
                                   double alpha_temp, double beta, double eps_young, long n,
                                   Rng rng) {
    require_positive_regime(ps);
    if (lam_K.empty()) throw std::domain_error("temperedness_exp_check: empty volume");
    if (!(alpha_temp > 0.0) || !std::isfinite(alpha_temp))
        throw std::domain_error("temperedness_exp_check: alpha must be positive");
    const double A = phi.repulsion();
    if (beta <= 0.0) beta = A;
    if (beta > A * (1.0 + 1e-12))
        throw std::domain_error("temperedness_exp_check: beta must not exceed the repulsion");
    double eps = eps_young > 0.0 ? eps_young : default_eps(beta, phi);

    const double sup = phi.sup_norm();
    const double m_phi = interaction_parameter(ps.part);
    const double c = sup * (1.0 + m_phi / eps);
    ps.marks.ensure_quad_integrable(c);

    const double theta = ps.part.range / ps.part.edge + std::sqrt(static_cast<double>(ps.part.dim));
    const double b_eps = eps * sup;
    const double contraction = beta > 0.0 ? (b_eps / beta) * std::exp(alpha_temp * theta) : 0.0;
    if (contraction >= 1.0)
        throw DivergentExponentError(
            "temperedness bound has no contraction: (eps ||phi|| / beta) e^{alpha theta} = " +
            std::to_string(contraction) + " >= 1; lower alpha below " +
            std::to_string(beta > 0.0 ? std::log(beta / b_eps) / theta : 0.0));

    double weight_sum = 0.0;
    for (const auto& kk : lam_K) weight_sum += std::exp(-alpha_temp * index_norm(kk, ps.part.dim));
    const double nu_alpha = beta / weight_sum;

    double quad = ps.marks.quad_laplace_exponent(c);
    BoundReport rep;
    rep.rhs = std::exp(ps.part.cube_volume() * quad / (1.0 - contraction));

    MeanVar mv;
    for (long i = 0; i < n; ++i) {
        GibbsSample s = sample_gibbs_rejection(lam_K, xi, phi, ps, rng);
        TemperednessReport tr = temperedness(s.config, ps.part, alpha_temp, MassMode::tv);
        mv.add(std::exp(nu_alpha * tr.value));
    }
    rep.lhs.value = mv.mean();
    rep.lhs.se = mv.stderror();
    rep.lhs.n_samples = n;
    rep.lhs.stream = rng.stream_id();
    rep.lhs.trunc_bound = 0.0;
    rep.parameters = {{"alpha_temp", alpha_temp},
                      {"beta", beta},
                      {"eps", eps},
                      {"sup_norm", sup},
                      {"m_phi", m_phi},
                      {"c_quad", c},
                      {"theta", theta},
                      {"nu_alpha", nu_alpha},
                      {"weight_sum", weight_sum},
                      {"contraction", contraction}};
    rep.pass = rep.lhs.value - 3.0 * rep.lhs.se <= rep.rhs;
    return rep;
}

UniformMomentReport uniform_moment_check(const Region& lam, int order,
                                         const std::vector<Region>& growing,
                                         const Configuration& xi, const PairPotential& phi,
                                         const PoissonSpec& ps, long n, Rng rng) {
    if (order < 0) throw std::domain_error("uniform_moment_check: order must be >= 0");
    if (growing.empty()) throw std::invalid_argument("uniform_moment_check: empty volume list");
    for (std::size_t i = 0; i < growing.size(); ++i) {
        if (!lam.subset_of(growing[i]))
            throw std::domain_error("uniform_moment_check: every volume must contain the region");
        if (i > 0 && !growing[i - 1].subset_of(growing[i]))
            throw std::domain_error("uniform_moment_check: volumes must be increasing");
    }

    Region saturated = lam.unite(halo(lam, ps.part));
    UniformMomentReport rep;
    rep.order = order;
    rep.saturation_index = -1;

    std::vector<double> xs, ys, ss;
    for (std::size_t i = 0; i < growing.size(); ++i) {
        const Region& big = growing[i];
        MeanVar mv;
        Rng sub = rng.child(i + 1);
        for (long s = 0; s < n; ++s) {
            GibbsSample draw = sample_gibbs_rejection(big, xi, phi, ps, sub);
            mv.add(std::pow(tv_mass(draw.config, lam, ps.part), order));
        }
        UniformMomentRow row;
        row.volume = big.volume(ps.part);
        row.estimate.value = mv.mean();
        row.estimate.se = mv.stderror();
        row.estimate.n_samples = n;
        row.estimate.stream = sub.stream_id();
        rep.rows.push_back(row);
        rep.max_value = std::max(rep.max_value, row.estimate.value);
        if (saturated.subset_of(big)) {
            if (rep.saturation_index < 0) rep.saturation_index = static_cast<int>(i);
            xs.push_back(row.volume);
            ys.push_back(row.estimate.value);
            ss.push_back(std::max(row.estimate.se, 1e-12));
        }
    }
    if (xs.size() >= 2) {
        rep.trend = wls_slope(xs, ys, ss);
        rep.trend_pass = rep.trend.slope <= 3.0 * rep.trend.slope_se;
    } else {
        // not enough saturated volumes to fit a trend; nothing to flag
        rep.trend_pass = true;
    }
    return rep;
}

DecayReport event_decay_probe(const std::vector<Region>& volumes, const Region& probe,
                              const Configuration& xi, const PairPotential& phi,
                              const PoissonSpec& ps, MassEvent::Stat stat,
                              const std::vector<double>& thresholds, long n, Rng rng,
                              double final_threshold) {
    if (volumes.empty() || thresholds.empty())
        throw std::invalid_argument("event_decay_probe: need volumes and thresholds");
    for (std::size_t i = 1; i < thresholds.size(); ++i)
        if (!(thresholds[i] > thresholds[i - 1]))
            throw std::invalid_argument("event_decay_probe: thresholds must be increasing");
    for (const auto& v : volumes)
        if (!probe.subset_of(v))
            throw std::domain_error("event_decay_probe: probe region must sit inside every volume");

    MassEvent ev;
    ev.cubes = probe;
    ev.stat = stat;

    const std::size_t nt = thresholds.size();
    DecayReport rep;
    rep.final_threshold_cfg = final_threshold;
    rep.rows.resize(nt);
    for (std::size_t t = 0; t < nt; ++t) rep.rows[t].threshold = thresholds[t];

    for (std::size_t vi = 0; vi < volumes.size(); ++vi) {
        Rng sub = rng.child(vi + 1);
        std::vector<MeanVar> hits(nt);
        MeanVar mass_mean;
        for (long s = 0; s < n; ++s) {
            GibbsSample draw = sample_gibbs_rejection(volumes[vi], xi, phi, ps, sub);
            Configuration glued = glue(draw.config, xi, volumes[vi], ps.part);
            double m = ev.statistic(glued, ps.part);
            mass_mean.add(m);
            // one sample serves every threshold; nesting keeps monotone in T
            for (std::size_t t = 0; t < nt; ++t) hits[t].add(m > thresholds[t] ? 1.0 : 0.0);
        }
        for (std::size_t t = 0; t < nt; ++t) {
            double p = hits[t].mean();
            if (p >= rep.rows[t].sup_prob) {
                rep.rows[t].sup_prob = p;
                rep.rows[t].sigma = hits[t].stderror();
                double markov = thresholds[t] > 0.0
                                    ? mass_mean.mean() / thresholds[t] +
                                          3.0 * mass_mean.stderror() / thresholds[t]
                                    : std::numeric_limits<double>::infinity();
                rep.rows[t].cheb_rhs = markov;
                rep.rows[t].cheb_ok = p - 3.0 * hits[t].stderror() <= markov;
            }
        }
    }
    rep.monotone = true;
    for (std::size_t t = 1; t < nt; ++t)
        rep.monotone = rep.monotone && rep.rows[t].sup_prob <= rep.rows[t - 1].sup_prob + 1e-12;
    rep.final_below = rep.rows.back().sup_prob <= final_threshold;
    rep.cheb_all_ok = true;
    for (const auto& r : rep.rows) rep.cheb_all_ok = rep.cheb_all_ok && r.cheb_ok;
    return rep;
}

}  // namespace vgibbs
