#include "vgibbs/specification.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vgibbs/errors.hpp"

namespace vgibbs {

namespace {

Configuration boundary_on_halo(const Region& lam, const Configuration& xi,
                               const PartitionSpec& ps) {
    Region h = halo(lam, ps);
    if (xi.window().empty() && xi.size() == 0) return Configuration(ps.dim, h);
    if (!h.subset_of(xi.window()))
        throw std::domain_error("boundary condition does not cover the halo");
    return project(xi, h, ps);
}

double relative_energy(const Configuration& eta, const Configuration& xi_halo, const Region& lam,
                       const PairPotential& phi, const PartitionSpec& ps) {
    EnergyBreakdown e = hamiltonian(eta, xi_halo, lam, phi, ps);
    double scale = std::abs(e.bulk) + std::abs(e.boundary) + 1.0;
    if (e.total < -1e-9 * scale)
        throw std::domain_error(
            "rejection sampling requires nonnegative relative energies; got a negative total");
    return std::max(0.0, e.total);
}

GibbsSample rejection_draw(const Region& lam, const Configuration& xi_halo,
                           const PairPotential& phi, const PoissonSpec& ps, Rng& rng,
                           long budget) {
    PoissonSpec on_lam = ps.on(lam);
    MeanVar accept_rate;
    for (long t = 1; t <= budget; ++t) {
        Configuration eta = sample_poisson(on_lam, rng);
        double h = relative_energy(eta, xi_halo, lam, phi, ps.part);
        double p = std::exp(-h);
        accept_rate.add(p);
        if (rng.uniform01() < p) return {std::move(eta), xi_halo, t};
    }
    throw LowAcceptanceError("rejection sampling exhausted its trial budget of " +
                                 std::to_string(budget) + " (acceptance estimate " +
                                 std::to_string(accept_rate.mean()) + ")",
                             accept_rate.mean(), budget);
}

void check_event_window(const MassEvent& event, const Region& lam, const Configuration& xi) {
    Region visible = lam.unite(xi.window().subtract(lam));
    if (!event.cubes.subset_of(visible))
        throw std::domain_error("event probes cubes outside the sampled volume and the boundary data");
}

}  // namespace

PartitionEstimate partition_function_mc(const Region& lam, const Configuration& xi,
                                        const PairPotential& phi, const PoissonSpec& ps, long n,
                                        Rng rng) {
    if (n < 2) throw std::invalid_argument("partition_function_mc: need at least 2 samples");
    Configuration xi_halo = boundary_on_halo(lam, xi, ps.part);
    PoissonSpec on_lam = ps.on(lam);
    MeanVar weights, energies;
    for (long i = 0; i < n; ++i) {
        Configuration eta = sample_poisson(on_lam, rng);
        double h = hamiltonian(eta, xi_halo, lam, phi, ps.part).total;
        weights.add(std::exp(-h));
        energies.add(h);
    }
    PartitionEstimate est;
    est.value = weights.mean();
    est.se = weights.stderror();
    est.n_samples = n;
    est.stream = rng.stream_id();
    est.trunc_bound = 0.0;  // the estimand is defined within the truncated model
    est.mean_energy = energies.mean();
    est.jensen_rhs = std::exp(-energies.mean());
    // convexity of exp holds sample-by-sample; a violation means a bug
    if (est.value < est.jensen_rhs * (1.0 - 1e-10))
        throw std::logic_error("partition_function_mc: sample mean fell below its convexity floor");
    return est;
}

GibbsSample sample_gibbs_rejection(const Region& lam, const Configuration& xi,
                                   const PairPotential& phi, const PoissonSpec& ps, Rng& rng,
                                   long budget) {
    if (budget < 1) throw std::invalid_argument("sample_gibbs_rejection: budget must be positive");
    Configuration xi_halo = boundary_on_halo(lam, xi, ps.part);
    return rejection_draw(lam, xi_halo, phi, ps, rng, budget);
}

GibbsChain::GibbsChain(const Region& lam, const Configuration& xi, const PairPotential& phi,
                       const PoissonSpec& ps, McmcParams params, Rng rng)
    : lam_(lam),
      phi_(&phi),
      ps_(ps.on(lam)),
      xi_halo_(boundary_on_halo(lam, xi, ps.part)),
      mp_(params),
      rng_(rng) {
    if (lam.empty()) throw std::domain_error("GibbsChain: empty volume");
    double wsum = mp_.w_birth + mp_.w_death + mp_.w_move + mp_.w_mark;
    if (mp_.w_birth < 0 || mp_.w_death < 0 || mp_.w_move < 0 || mp_.w_mark < 0 ||
        std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("GibbsChain: proposal weights must be nonnegative and sum to 1");
    if (mp_.burn_in < 0 || mp_.thin < 1)
        throw std::invalid_argument("GibbsChain: burn_in >= 0 and thin >= 1 required");

    lam_cubes_ = lam.cubes();
    lam.bounds(ps_.part, lo_, hi_);
    kappa_tot_ = ps_.marks.tail_intensity() * lam.volume(ps_.part);
    sigma_ = mp_.move_sigma > 0.0 ? mp_.move_sigma : 0.5 * ps_.part.edge;

    for (std::size_t i = 0; i < xi_halo_.atoms().size(); ++i)
        xi_cells_[cube_index(xi_halo_.atoms()[i].x, ps_.part)].push_back(i);

    // start from a reference draw
    Configuration eta = sample_poisson(ps_, rng_);
    for (const auto& a : eta.atoms()) insert_atom(a);
}

double GibbsChain::atom_energy(const Atom& a, std::size_t exclude) const {
    const int d = ps_.part.dim;
    double e = phi_->eval(a.x, a.x, d) * norm2(a.v, d);
    CubeIndex k = cube_index(a.x, ps_.part);
    Region nb = neighbor_cubes(k, ps_.part);
    auto scan_state = [&](const CubeIndex& j) {
        auto it = cells_.find(j);
        if (it == cells_.end()) return;
        for (std::size_t idx : it->second) {
            if (idx == exclude) continue;
            e += 2.0 * phi_->eval(a.x, atoms_[idx].x, d) * dot(a.v, atoms_[idx].v, d);
        }
    };
    auto scan_xi = [&](const CubeIndex& j) {
        auto it = xi_cells_.find(j);
        if (it == xi_cells_.end()) return;
        for (std::size_t idx : it->second) {
            const Atom& b = xi_halo_.atoms()[idx];
            e += 2.0 * phi_->eval(a.x, b.x, d) * dot(a.v, b.v, d);
        }
    };
    scan_state(k);  // xi atoms never share a cube with lam atoms
    for (const auto& j : nb) {
        scan_state(j);
        scan_xi(j);
    }
    return e;
}

void GibbsChain::insert_atom(const Atom& a) {
    atoms_.push_back(a);
    cells_[cube_index(a.x, ps_.part)].push_back(atoms_.size() - 1);
}

void GibbsChain::remove_atom(std::size_t i) {
    CubeIndex k = cube_index(atoms_[i].x, ps_.part);
    auto& v = cells_[k];
    v.erase(std::find(v.begin(), v.end(), i));
    if (v.empty()) cells_.erase(k);
    std::size_t last = atoms_.size() - 1;
    if (i != last) {
        atoms_[i] = atoms_[last];
        CubeIndex kl = cube_index(atoms_[i].x, ps_.part);
        auto& vl = cells_[kl];
        *std::find(vl.begin(), vl.end(), last) = i;
    }
    atoms_.pop_back();
}

double GibbsChain::birth_log_ratio(const Atom& a) const {
    return -atom_energy(a, atoms_.size()) + std::log(kappa_tot_) -
           std::log(static_cast<double>(atoms_.size()) + 1.0);
}

double GibbsChain::death_log_ratio(std::size_t i) const {
    return atom_energy(atoms_[i], i) + std::log(static_cast<double>(atoms_.size())) -
           std::log(kappa_tot_);
}

namespace {
double reflect_into(double x, double lo, double hi) {
    double span = 2.0 * (hi - lo);
    double t = std::fmod(x - lo, span);
    if (t < 0.0) t += span;
    return lo + std::min(t, span - t);
}
}  // namespace

void GibbsChain::step() {
    ++steps_;
    const int d = ps_.part.dim;
    double u = rng_.uniform01();
    if (u < mp_.w_birth) {
        Atom a;
        const CubeIndex& k = lam_cubes_[rng_.pick(lam_cubes_.size())];
        Vec c = cube_center(k, ps_.part);
        for (int i = 0; i < d; ++i) a.x[i] = c[i] + ps_.part.edge * (rng_.uniform01() - 0.5);
        a.v = ps_.marks.sample_mark(rng_);
        double lr = birth_log_ratio(a);
        if (lr >= 0.0 || rng_.uniform01() < std::exp(lr)) {
            insert_atom(a);
            ++accepted_;
        }
        return;
    }
    if (u < mp_.w_birth + mp_.w_death) {
        if (atoms_.empty()) return;
        std::size_t i = rng_.pick(atoms_.size());
        double lr = death_log_ratio(i);
        if (lr >= 0.0 || rng_.uniform01() < std::exp(lr)) {
            remove_atom(i);
            ++accepted_;
        }
        return;
    }
    if (u < mp_.w_birth + mp_.w_death + mp_.w_move) {
        if (atoms_.empty()) return;
        std::size_t i = rng_.pick(atoms_.size());
        Atom moved = atoms_[i];
        for (int c = 0; c < d; ++c)
            moved.x[c] = reflect_into(moved.x[c] + sigma_ * rng_.gaussian(), lo_[c], hi_[c]);
        if (!lam_.contains(cube_index(moved.x, ps_.part))) return;
        double lr = -(atom_energy(moved, i) - atom_energy(atoms_[i], i));
        if (lr >= 0.0 || rng_.uniform01() < std::exp(lr)) {
            remove_atom(i);
            insert_atom(moved);
            ++accepted_;
        }
        return;
    }
    // mark resample
    if (atoms_.empty()) return;
    std::size_t i = rng_.pick(atoms_.size());
    Atom changed = atoms_[i];
    changed.v = ps_.marks.sample_mark(rng_);
    double lr = -(atom_energy(changed, i) - atom_energy(atoms_[i], i));
    if (lr >= 0.0 || rng_.uniform01() < std::exp(lr)) {
        remove_atom(i);
        insert_atom(changed);
        ++accepted_;
    }
}

void GibbsChain::run(long steps) {
    for (long i = 0; i < steps; ++i) step();
}

Configuration GibbsChain::snapshot() const {
    return Configuration::trusted(ps_.part.dim, lam_, atoms_);
}

GibbsSample sample_gibbs_mcmc(const Region& lam, const Configuration& xi, const PairPotential& phi,
                              const PoissonSpec& ps, const McmcParams& params, Rng rng) {
    GibbsChain chain(lam, xi, phi, ps, params, rng);
    chain.run(params.burn_in);
    return {chain.snapshot(), chain.boundary(), chain.steps_done()};
}

std::vector<Configuration> mcmc_samples(const Region& lam, const Configuration& xi,
                                        const PairPotential& phi, const PoissonSpec& ps,
                                        const McmcParams& params, long n, Rng rng) {
    GibbsChain chain(lam, xi, phi, ps, params, rng);
    chain.run(params.burn_in);
    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        chain.run(params.thin);
        out.push_back(chain.snapshot());
    }
    return out;
}

KernelEstimate kernel_probability(const Region& lam, const Configuration& xi,
                                  const PairPotential& phi, const PoissonSpec& ps,
                                  const MassEvent& event, long n, Rng rng) {
    if (n < 2) throw std::invalid_argument("kernel_probability: need at least 2 samples");
    check_event_window(event, lam, xi);
    Configuration xi_halo = boundary_on_halo(lam, xi, ps.part);
    MeanVar mv;
    for (long i = 0; i < n; ++i) {
        GibbsSample s = rejection_draw(lam, xi_halo, phi, ps, rng, 1000000);
        Configuration glued = glue(s.config, xi, lam, ps.part);
        mv.add(event.holds(glued, ps.part) ? 1.0 : 0.0);
    }
    KernelEstimate est;
    est.value = mv.mean();
    est.se = mv.stderror();
    est.n_samples = n;
    est.stream = rng.stream_id();
    est.trunc_bound = 0.0;
    return est;
}

ConsistencyReport consistency_residual(const Region& inner_lam, const Region& outer_lam,
                                       const Configuration& xi, const PairPotential& phi,
                                       const PoissonSpec& ps, const MassEvent& event, long n,
                                       Rng rng) {
    if (!inner_lam.subset_of(outer_lam))
        throw std::domain_error("consistency_residual: inner volume must sit inside the outer one");
    Region inner_halo = halo(inner_lam, ps.part);
    Region outer_with_data = outer_lam.unite(xi.window());
    if (!inner_halo.subset_of(outer_with_data))
        throw std::domain_error("consistency_residual: inner halo reaches outside available data");

    ConsistencyReport rep;
    rep.direct = kernel_probability(outer_lam, xi, phi, ps, event, n, rng.child(1));

    Rng rng2 = rng.child(2);
    Configuration xi_halo_outer = boundary_on_halo(outer_lam, xi, ps.part);
    MeanVar mv;
    for (long i = 0; i < n; ++i) {
        GibbsSample outer = rejection_draw(outer_lam, xi_halo_outer, phi, ps, rng2, 1000000);
        Configuration glued_outer = glue(outer.config, xi, outer_lam, ps.part);
        Configuration inner_bc = project(glued_outer, inner_halo, ps.part);
        GibbsSample inner = rejection_draw(inner_lam, inner_bc, phi, ps, rng2, 1000000);
        Configuration final_cfg = glue(inner.config, glued_outer, inner_lam, ps.part);
        mv.add(event.holds(final_cfg, ps.part) ? 1.0 : 0.0);
    }
    rep.two_stage.value = mv.mean();
    rep.two_stage.se = mv.stderror();
    rep.two_stage.n_samples = n;
    rep.two_stage.stream = rng2.stream_id();
    rep.two_stage.trunc_bound = 0.0;

    rep.diff = rep.two_stage.value - rep.direct.value;
    rep.sigma = std::hypot(rep.two_stage.se, rep.direct.se);
    rep.pass = std::abs(rep.diff) <= 3.0 * rep.sigma + 1e-12;
    return rep;
}

DlrReport dlr_residual(const Region& lam, const Configuration& xi, const PairPotential& phi,
                       const PoissonSpec& ps, const MassEvent& event,
                       const std::vector<int>& rings, long n, Rng rng) {
    if (rings.empty()) throw std::invalid_argument("dlr_residual: need at least one ring count");
    DlrReport rep;
    std::vector<double> xs, ys, ss;
    for (int r : rings) {
        if (r < 1) throw std::domain_error("dlr_residual: ring counts must be >= 1");
        Region outer = grow_by_halo(lam, ps.part, r);
        DlrRow row;
        row.rings = r;
        row.report = consistency_residual(lam, outer, xi, phi, ps, event, n,
                                          rng.child(static_cast<std::uint64_t>(r)));
        xs.push_back(static_cast<double>(r));
        ys.push_back(std::abs(row.report.diff));
        ss.push_back(std::max(row.report.sigma, 1e-12));
        rep.rows.push_back(std::move(row));
    }
    rep.rows_pass = true;
    for (const auto& row : rep.rows) rep.rows_pass = rep.rows_pass && row.report.pass;
    if (rep.rows.size() >= 2) {
        rep.trend = wls_slope(xs, ys, ss);
        rep.trend_pass = rep.trend.slope <= 3.0 * rep.trend.slope_se;
    } else {
        rep.trend_pass = true;
    }
    return rep;
}

}  // namespace vgibbs
