#include "vgibbs/reference_measure.hpp"

#include <cmath>
#include <stdexcept>

#include "vgibbs/stats.hpp"

namespace vgibbs {

PoissonSpec::PoissonSpec(PartitionSpec p, MarkMeasure m, Region w)
    : part(p), marks(std::move(m)), window(std::move(w)) {
    if (part.dim != marks.dim()) throw std::domain_error("PoissonSpec: dimension mismatch");
}

Configuration sample_poisson(const PoissonSpec& ps, Rng& rng) {
    const double per_cube = ps.marks.tail_intensity() * ps.part.cube_volume();
    const double g = ps.part.edge;
    std::vector<Atom> atoms;
    for (const auto& k : ps.window) {
        long n = rng.poisson(per_cube);
        Vec center = cube_center(k, ps.part);
        std::size_t first = atoms.size();
        for (long i = 0; i < n; ++i) {
            Atom a;
            for (int tries = 0;; ++tries) {
                for (int c = 0; c < ps.part.dim; ++c)
                    a.x[c] = center[c] + g * (rng.uniform01() - 0.5);
                bool clash = false;
                for (std::size_t j = first; j < atoms.size() && !clash; ++j) {
                    clash = true;
                    for (int c = 0; c < ps.part.dim; ++c)
                        if (atoms[j].x[c] != a.x[c]) {
                            clash = false;
                            break;
                        }
                }
                if (!clash) break;
                if (tries > 64) throw std::runtime_error("sample_poisson: cannot avoid collision");
            }
            a.v = ps.marks.sample_mark(rng);
            atoms.push_back(a);
        }
    }
    return Configuration::trusted(ps.part.dim, ps.window, std::move(atoms));
}

LaplaceValue laplace_closed_form(const PoissonSpec& ps, const Vec& h, const CubeFunction& psi) {
    if (!psi.support().subset_of(ps.window))
        throw std::domain_error("laplace_closed_form: psi support exceeds the window");
    const double cube_vol = ps.part.cube_volume();
    KahanSum expo;
    for (std::size_t i = 0; i < psi.support().size(); ++i) {
        double w = psi.values()[i];
        if (w == 0.0) continue;
        expo.add(cube_vol * ps.marks.laplace_exponent(h, w));
    }
    LaplaceValue out;
    out.value = std::exp(expo.value());

    // truncation certificate: each discarded-core term is bounded by
    // |<h,v> psi| e^{|<h,v> psi|}, integrated over the core and the window
    const double eps = ps.marks.eps_trunc();
    const double hn = norm(h, ps.part.dim);
    const double psup = psi.sup_norm();
    double b = ps.window.volume(ps.part) * hn * psup * ps.marks.first_moment_below(eps) *
               std::exp(hn * eps * psup);
    out.trunc_bound = out.value * std::expm1(b);
    return out;
}

KernelEstimate empirical_laplace(const PoissonSpec& ps, const Vec& h, const CubeFunction& psi,
                                 long n, Rng rng) {
    if (n < 2) throw std::invalid_argument("empirical_laplace: need at least 2 samples");
    LaplaceValue target = laplace_closed_form(ps, h, psi);  // also validates integrability
    MeanVar mv;
    for (long i = 0; i < n; ++i) {
        Configuration eta = sample_poisson(ps, rng);
        mv.add(std::exp(pairing(eta, h, psi, ps.part)));
    }
    KernelEstimate est;
    est.value = mv.mean();
    est.se = mv.stderror();
    est.n_samples = n;
    est.stream = rng.stream_id();
    est.trunc_bound = target.trunc_bound;
    return est;
}

MomentBoundCheck moment_bound_check(const PoissonSpec& ps, const Vec& h, const CubeFunction& psi,
                                    int order, long n_samples, Rng rng) {
    if (order < 1) throw std::domain_error("moment_bound_check: order must be >= 1");
    if (n_samples < 2) throw std::invalid_argument("moment_bound_check: need >= 2 samples");
    double psi_sup = 0.0;
    for (double w : psi.values())
        psi_sup = std::max(psi_sup, ps.marks.psi(h, w));
    MeanVar mv;
    for (long i = 0; i < n_samples; ++i) {
        Configuration eta = sample_poisson(ps, rng);
        mv.add(std::pow(std::abs(pairing(eta, h, psi, ps.part)), order));
    }
    MomentBoundCheck out;
    out.order = order;
    out.lhs = mv.mean();
    out.lhs_se = mv.stderror();
    double rhs = 1.0;
    for (int i = 2; i <= order; ++i) rhs *= i;  // order!
    rhs *= std::pow(psi_sup, order) *
           std::pow(std::max(1.0, ps.window.volume(ps.part)), order);
    out.rhs = rhs;
    out.pass = out.lhs - 3.0 * out.lhs_se <= rhs;
    return out;
}

double poisson_tv_moment(const PoissonSpec& ps, const Region& region, int order) {
    if (order < 0 || order > 4)
        throw std::domain_error("poisson_tv_moment: order must be in [0,4]");
    if (order == 0) return 1.0;
    const double vol = region.volume(ps.part);
    double k1 = vol * ps.marks.truncated_radial_moment(1);
    double k2 = vol * ps.marks.truncated_radial_moment(2);
    double k3 = vol * ps.marks.truncated_radial_moment(3);
    double k4 = vol * ps.marks.truncated_radial_moment(4);
    switch (order) {
        case 1: return k1;
        case 2: return k2 + k1 * k1;
        case 3: return k3 + 3.0 * k2 * k1 + k1 * k1 * k1;
        default:
            return k4 + 4.0 * k3 * k1 + 3.0 * k2 * k2 + 6.0 * k2 * k1 * k1 +
                   k1 * k1 * k1 * k1;
    }
}

}  // namespace vgibbs
