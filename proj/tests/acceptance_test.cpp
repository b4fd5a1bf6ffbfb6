// Acceptance gate: ten end-to-end checks of the sampler and estimate
// machinery, one printed pass/fail line each.  Every tolerance is pinned
// next to the check that uses it; the binary exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vgibbs/errors.hpp"
#include "vgibbs/estimates.hpp"
#include "vgibbs/interaction.hpp"
#include "vgibbs/io.hpp"

#ifndef VGIBBS_CLI_PATH
#error "VGIBBS_CLI_PATH must point at the built binary"
#endif

namespace {

using namespace vgibbs;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[768];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return std::string(buf);
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

CubeIndex idx(int a, int b = 0) {
    CubeIndex c;
    c.k[0] = a;
    c.k[1] = b;
    return c;
}

Region one_cube(int a, int b = 0) { return Region(std::vector<CubeIndex>{idx(a, b)}); }

// Criterion 1: sampled Laplace functionals against the closed product
// formula on five fixed (measure, h, psi) fixtures spanning d = 1 and 2.
Outcome laplace_identity() {
    const long kSamples = 100000;
    const double kMaxSecondsPerFixture = 120.0;

    struct Fix {
        const char* name;
        PoissonSpec ps;
        Vec h;
        CubeFunction psi;
    };
    std::vector<Fix> fixtures;
    {
        PartitionSpec p1(1, 1.0, 1.0);
        Region w1 = Region::box(1, {-1}, {1});
        fixtures.push_back({"d1 sub-exponential", PoissonSpec(p1, MarkMeasure(1, 1.0, 1.0, 0.5), w1),
                            Vec{0.5}, CubeFunction(w1, {1.0, 0.8, 0.4})});
        Region w2 = Region::box(1, {0}, {3});
        fixtures.push_back({"d1 gaussian tail",
                            PoissonSpec(p1, MarkMeasure(1, 1.2, 2.0, 0.3), w2), Vec{-1.5},
                            CubeFunction(w2, {1.0, 0.5, 0.25, 0.125})});
        Region w3 = Region::box(1, {0}, {1});
        fixtures.push_back({"d1 steep tail ray",
                            PoissonSpec(p1, MarkMeasure(1, 1.8, 3.0, 0.2, MarkDirection::positive_ray), w3),
                            Vec{2.0}, CubeFunction(w3, {1.0, -0.5})});
        PartitionSpec p2(2, 1.0, 1.0);
        Region w4 = Region::box(2, {0, 0}, {1, 1});
        fixtures.push_back({"d2 gaussian tail", PoissonSpec(p2, MarkMeasure(2, 2.0, 2.0, 0.5), w4),
                            Vec{0.4, -0.3}, CubeFunction::indicator(w4)});
        Region w5 = Region::box(2, {0, 0}, {2, 1});
        fixtures.push_back({"d2 exponential tail ray",
                            PoissonSpec(p2, MarkMeasure(2, 2.5, 1.0, 0.6, MarkDirection::positive_ray), w5),
                            Vec{0.7, 0.2}, CubeFunction(w5, {1.0, 0.9, 0.6, 0.3, -0.4, 0.2})});
    }

    int ok = 0;
    double worst_ratio = 0.0, worst_time = 0.0;
    std::string first_bad;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const Fix& fx = fixtures[i];
        auto t0 = Clock::now();
        LaplaceValue closed = laplace_closed_form(fx.ps, fx.h, fx.psi);
        KernelEstimate emp = empirical_laplace(fx.ps, fx.h, fx.psi, kSamples, Rng(1100u + i));
        double dt = seconds_since(t0);
        double allow = 3.0 * emp.se + closed.trunc_bound;
        double err = std::abs(emp.value - closed.value);
        double ratio = allow > 0.0 ? err / allow : (err == 0.0 ? 0.0 : 1e99);
        worst_ratio = std::max(worst_ratio, ratio);
        worst_time = std::max(worst_time, dt);
        bool good = err <= allow && dt < kMaxSecondsPerFixture;
        if (good)
            ++ok;
        else if (first_bad.empty())
            first_bad = fmt(" [%s err %.3g allow %.3g %.1fs]", fx.name, err, allow, dt);
    }
    return {ok == 5, fmt("%d/5 fixtures within 3se+trunc at n=%ld, worst err/allow %.2f, "
                         "slowest %.1fs%s",
                         ok, kSamples, worst_ratio, worst_time, first_bad.c_str())};
}

// Criterion 2: normalizing-constant estimates on 10 randomized fixtures
// stay in (0, 1 + 3se] and above the convexity floor minus 3se.
Outcome partition_bounds() {
    const long kSamples = 20000;
    Rng master(2026u);
    int ok = 0;
    double min_z = 1e99, max_z = -1e99;
    std::string first_bad;
    for (int i = 0; i < 10; ++i) {
        Rng r = master.child(static_cast<std::uint64_t>(i));
        int d = 1 + (i % 2);
        PartitionSpec part(d, 1.0, 1.0);
        double alpha = d + 0.2 + 0.6 * r.uniform01();
        double beta = 1.0 + 1.5 * r.uniform01();
        double eps = 0.4 + 0.4 * r.uniform01();
        MarkMeasure marks(d, alpha, beta, eps, MarkDirection::positive_ray);
        Region lam;
        if (d == 1) {
            int a = static_cast<int>(r.pick(2)), b = static_cast<int>(r.pick(2));
            lam = Region::box(1, {-a}, {b});
        } else {
            int a = static_cast<int>(r.pick(2)), b = static_cast<int>(r.pick(2));
            lam = Region::box(2, {0, 0}, {a, b});
        }
        auto phi = make_potential(i % 2 == 0 ? PotentialKind::hard_range : PotentialKind::smooth_bump,
                                  0.05 + 0.35 * r.uniform01(), part);
        PoissonSpec ps(part, marks, lam);
        Rng br = r.child(99u);
        Configuration xi = sample_poisson(ps.on(halo(lam, part)), br);
        PartitionEstimate est = partition_function_mc(lam, xi, *phi, ps, kSamples, r.child(7u));
        min_z = std::min(min_z, est.value);
        max_z = std::max(max_z, est.value);
        bool good = est.value > 0.0 && est.value <= 1.0 + 3.0 * est.se &&
                    est.value >= est.jensen_rhs - 3.0 * est.se;
        if (good)
            ++ok;
        else if (first_bad.empty())
            first_bad = fmt(" [fixture %d Z %.4g se %.2g floor %.4g]", i, est.value, est.se,
                            est.jensen_rhs);
    }
    return {ok == 10,
            fmt("%d/10 fixtures in (0, 1+3se] and above the convexity floor, Z range [%.3g, %.3g]%s",
                ok, min_z, max_z, first_bad.c_str())};
}

// Criterion 3: cell-list energies equal the quadratic-loop reference to
// 1e-12 relative on 1000 randomized instances.
Outcome hamiltonian_equivalence() {
    const double kRelTol = 1e-12;
    Rng master(303u);
    long violations = 0;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Rng r = master.child(static_cast<std::uint64_t>(i));
        int d = 1 + (i % 2);
        double delta = 0.6 + 0.8 * r.uniform01();
        double range = delta * (0.6 + 1.8 * r.uniform01());
        PartitionSpec part(d, delta, range);
        Region lam = d == 1 ? Region::box(1, {-2}, {2}) : Region::box(2, {-1, -1}, {1, 1});
        Region ring = grow_by_halo(lam, part, 1).subtract(lam);
        Vec llo, lhi, rlo, rhi;
        lam.bounds(part, llo, lhi);
        ring.bounds(part, rlo, rhi);

        auto draw_atoms = [&](const Vec& lo, const Vec& hi, std::size_t count, bool skip_lam) {
            std::vector<Atom> out;
            while (out.size() < count) {
                Atom a;
                for (int k = 0; k < d; ++k) a.x[k] = r.uniform(lo[k], hi[k]);
                if (skip_lam && lam.contains(cube_index(a.x, part))) continue;
                for (int k = 0; k < d; ++k) a.v[k] = r.gaussian();
                out.push_back(a);
            }
            return out;
        };
        std::size_t n_eta = r.pick(121), n_xi = r.pick(81);
        Configuration eta = Configuration::trusted(d, lam, draw_atoms(llo, lhi, n_eta, false));
        Configuration xi = Configuration::trusted(d, ring, draw_atoms(rlo, rhi, n_xi, true));

        PotentialKind kind = i % 3 == 0   ? PotentialKind::zero
                             : i % 3 == 1 ? PotentialKind::hard_range
                                          : PotentialKind::smooth_bump;
        auto phi = make_potential(kind, 0.05 + 0.95 * r.uniform01(), part);

        EnergyBreakdown fast = hamiltonian(eta, xi, lam, *phi, part);
        EnergyBreakdown ref = hamiltonian_all_pairs(eta, xi, lam, *phi, part);
        double scale = std::max(1.0, std::abs(ref.total));
        double dev = std::max({std::abs(fast.total - ref.total),
                               std::abs(fast.bulk - ref.bulk),
                               std::abs(fast.boundary - ref.boundary)}) /
                     scale;
        worst = std::max(worst, dev);
        if (dev > kRelTol) ++violations;
    }
    return {violations == 0,
            fmt("%ld/1000 instances off by more than %.0e relative, worst %.2e", violations,
                kRelTol, worst)};
}

// Criterion 4: with positive-ray marks the energy dominates
// repulsion * sum of squared cube masses on 10^4 sampled configurations.
Outcome hamiltonian_lower_bound() {
    const double kFpSlack = 1e-12;
    MarkMeasure m1(1, 1.0, 2.0, 0.4, MarkDirection::positive_ray);
    MarkMeasure m2(2, 2.0, 2.0, 0.4, MarkDirection::positive_ray);
    Rng master(404u);
    long violations = 0;
    double worst_margin = 1e99, max_rhs = 0.0;
    for (int i = 0; i < 10000; ++i) {
        Rng r = master.child(static_cast<std::uint64_t>(i));
        int d = 1 + (i % 2);
        bool hard = (i / 2) % 2 == 0;
        PartitionSpec part = hard ? PartitionSpec(d, 1.0, 1.0) : PartitionSpec(d, 0.5, 1.0);
        Region lam;
        if (d == 1)
            lam = hard ? Region::box(1, {-1}, {1}) : Region::box(1, {-2}, {2});
        else
            lam = hard ? Region::box(2, {0, 0}, {1, 1}) : Region::box(2, {0, 0}, {2, 2});
        auto phi = make_potential(hard ? PotentialKind::hard_range : PotentialKind::smooth_bump,
                                  0.1 + 0.9 * r.uniform01(), part);
        PoissonSpec ps(part, d == 1 ? m1 : m2, lam);
        Configuration eta = sample_poisson(ps, r);
        Configuration xi = i % 3 == 0 ? sample_poisson(ps.on(halo(lam, part)), r)
                                      : vacuum_boundary(lam, part);
        double h = hamiltonian(eta, xi, lam, *phi, part).total;
        double rhs = lower_bound_rhs(eta, lam, phi->repulsion(), part);
        max_rhs = std::max(max_rhs, rhs);
        worst_margin = std::min(worst_margin, h - rhs);
        if (h < rhs * (1.0 - kFpSlack) - kFpSlack) ++violations;
    }
    return {violations == 0, fmt("%ld/10000 configurations below the mass-square floor, "
                                 "tightest margin %.3g, largest floor %.3g",
                                 violations, worst_margin, max_rhs)};
}

// Criterion 5: exact rejection draws and the Metropolis chain agree in
// distribution (two-sample KS on tv mass and atom count, 1% level).
Outcome sampler_agreement() {
    const double kLevel = 0.01;
    const long kSamples = 10000;
    const double kMaxSeconds = 300.0;
    auto t0 = Clock::now();
    PartitionSpec part(1, 1.0, 1.0);
    MarkMeasure marks(1, 1.0, 2.0, 0.4, MarkDirection::positive_ray);
    auto phi = make_potential(PotentialKind::hard_range, 0.15, part);
    double min_p = 1.0;
    std::string where;
    for (int vi = 0; vi < 2; ++vi) {
        Region lam = vi == 0 ? Region::box(1, {0}, {0}) : Region::box(1, {-1}, {1});
        PoissonSpec ps(part, marks, lam);
        Configuration xi = vacuum_boundary(lam, part);
        std::vector<double> tv_r, ct_r, tv_m, ct_m;
        tv_r.reserve(kSamples);
        Rng rrej(5100u + vi);
        for (long i = 0; i < kSamples; ++i) {
            GibbsSample s = sample_gibbs_rejection(lam, xi, *phi, ps, rrej);
            tv_r.push_back(tv_mass(s.config));
            ct_r.push_back(static_cast<double>(s.config.size()));
        }
        McmcParams mp;
        mp.burn_in = 5000;
        mp.thin = 100;
        std::vector<Configuration> chain = mcmc_samples(lam, xi, *phi, ps, mp, kSamples,
                                                        Rng(5200u + vi));
        for (const Configuration& c : chain) {
            tv_m.push_back(tv_mass(c));
            ct_m.push_back(static_cast<double>(c.size()));
        }
        KsResult k_tv = ks_test_2sample(tv_r, tv_m);
        KsResult k_ct = ks_test_2sample(ct_r, ct_m);
        if (k_tv.pvalue < min_p) { min_p = k_tv.pvalue; where = vi == 0 ? "tv, one cube" : "tv, three cubes"; }
        if (k_ct.pvalue < min_p) { min_p = k_ct.pvalue; where = vi == 0 ? "count, one cube" : "count, three cubes"; }
    }
    double dt = seconds_since(t0);
    bool pass = min_p > kLevel && dt < kMaxSeconds;
    return {pass, fmt("min KS p %.3g (%s) at the %.0f%% level, n=%ld per sampler, %.1fs", min_p,
                      where.c_str(), kLevel * 100.0, kSamples, dt)};
}

// Criterion 6: resampling a sub-volume from an outer-kernel draw leaves six
// fixed event probabilities unchanged at 3 sigma.
Outcome kernel_consistency() {
    const long kSamples = 10000;
    PartitionSpec p1(1, 1.0, 1.0);
    PartitionSpec p2(2, 1.0, 1.0);
    MarkMeasure m1(1, 1.0, 2.0, 0.5, MarkDirection::positive_ray);
    MarkMeasure m2(2, 2.0, 2.0, 1.0, MarkDirection::positive_ray);

    struct Case {
        PartitionSpec part;
        MarkMeasure marks;
        Region inner, outer;
        PotentialKind kind;
        double strength;
        MassEvent event;
        bool sampled_boundary;
    };
    std::vector<Case> cases;
    cases.push_back({p1, m1, one_cube(0), Region::box(1, {-1}, {1}), PotentialKind::zero, 0.0,
                     {one_cube(0), MassEvent::Stat::tv, MassEvent::Op::gt, 0.7}, false});
    cases.push_back({p1, m1, one_cube(0), Region::box(1, {-1}, {1}), PotentialKind::hard_range, 0.2,
                     {Region::box(1, {-1}, {1}), MassEvent::Stat::count, MassEvent::Op::ge, 2.0},
                     true});
    cases.push_back({p1, m1, Region::box(1, {0}, {1}), Region::box(1, {-1}, {2}),
                     PotentialKind::smooth_bump, 0.3,
                     {one_cube(1), MassEvent::Stat::tv, MassEvent::Op::gt, 0.5}, true});
    cases.push_back({p1, m1, Region::box(1, {-1}, {0}), Region::box(1, {-2}, {1}),
                     PotentialKind::hard_range, 0.25,
                     {one_cube(-2), MassEvent::Stat::count, MassEvent::Op::ge, 1.0}, true});
    cases.push_back({p2, m2, one_cube(0, 0), Region::box(2, {-1, -1}, {1, 1}), PotentialKind::zero,
                     0.0, {one_cube(0, 0), MassEvent::Stat::count, MassEvent::Op::ge, 1.0}, false});
    cases.push_back({p2, m2, one_cube(0, 0), Region::box(2, {-1, -1}, {1, 1}),
                     PotentialKind::hard_range, 0.12,
                     {Region::box(2, {0, 0}, {1, 1}), MassEvent::Stat::tv, MassEvent::Op::gt, 0.8},
                     true});

    int ok = 0;
    double worst_pull = 0.0;
    std::string first_bad;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const Case& c = cases[i];
        auto phi = make_potential(c.kind, c.strength, c.part);
        PoissonSpec ps(c.part, c.marks, c.outer);
        Rng br(6200u + i);
        Configuration xi = c.sampled_boundary ? sample_poisson(ps.on(halo(c.outer, c.part)), br)
                                              : vacuum_boundary(c.outer, c.part);
        ConsistencyReport rep =
            consistency_residual(c.inner, c.outer, xi, *phi, ps, c.event, kSamples, Rng(6100u + i));
        double pull = rep.sigma > 0.0 ? std::abs(rep.diff) / rep.sigma : 0.0;
        worst_pull = std::max(worst_pull, pull);
        if (rep.pass)
            ++ok;
        else if (first_bad.empty())
            first_bad = fmt(" [case %zu diff %.4g sigma %.2g]", i, rep.diff, rep.sigma);
    }
    return {ok == 6, fmt("%d/6 cases within 3 sigma at n=%ld two-stage draws, worst pull %.2f%s",
                         ok, kSamples, worst_pull, first_bad.c_str())};
}

// Criterion 7: one-volume residuals against kernels on 1..3 halo rings stay
// within 3 sigma and do not grow with the ring count.
Outcome dlr_residual_decay() {
    const long kSamples = 4000;
    PartitionSpec part(1, 1.0, 1.0);
    MarkMeasure marks(1, 1.0, 2.0, 0.8, MarkDirection::positive_ray);
    auto phi = make_potential(PotentialKind::hard_range, 0.15, part);
    Region lam = one_cube(0);
    PoissonSpec ps(part, marks, lam);
    Region data = grow_by_halo(lam, part, 4).subtract(lam);
    Rng br(7009u);
    Configuration xi = sample_poisson(ps.on(data), br);
    MassEvent ev{one_cube(0), MassEvent::Stat::tv, MassEvent::Op::gt, 0.6};
    DlrReport rep = dlr_residual(lam, xi, *phi, ps, ev, {1, 2, 3}, kSamples, Rng(7100u));
    std::string rows;
    for (const DlrRow& row : rep.rows)
        rows += fmt(" N=%d:%.4f±%.4f", row.rings, row.report.diff, row.report.sigma);
    return {rep.rows_pass && rep.trend_pass,
            fmt("rows %s, trend slope %.3g (se %.2g), residuals%s", rep.rows_pass ? "pass" : "FAIL",
                rep.trend.slope, rep.trend.slope_se, rows.c_str())};
}

// Criterion 8: exponential moment bound at beta in {0, A/2, A} on one cube,
// and the discounted-mass variant on three cubes.
Outcome exponential_moments() {
    const long kSamples = 20000;
    PartitionSpec part(1, 1.0, 1.0);
    MarkMeasure marks(1, 1.0, 2.0, 0.5, MarkDirection::positive_ray);
    auto phi = make_potential(PotentialKind::hard_range, 0.1, part);
    const double A = phi->repulsion();

    Region lam1 = one_cube(0);
    PoissonSpec ps1(part, marks, lam1);
    Configuration vac1 = vacuum_boundary(lam1, part);
    int ok = 0;
    std::string parts;
    const double betas[3] = {0.0, A / 2.0, A};
    for (int i = 0; i < 3; ++i) {
        BoundReport rep = exp_moment_check(idx(0), lam1, vac1, *phi, ps1, betas[i], 0.0, kSamples,
                                           Rng(8100u + i));
        parts += fmt(" b=%.2g:%.4f<=%.4f", betas[i], rep.lhs.value, rep.rhs);
        if (rep.pass) ++ok;
    }

    Region lam3 = Region::box(1, {-1}, {1});
    PoissonSpec ps3(part, marks, lam3);
    BoundReport tmp = temperedness_exp_check(lam3, vacuum_boundary(lam3, part), *phi, ps3, 0.2, 0.0,
                                             0.0, kSamples, Rng(8200u));
    parts += fmt(" discounted:%.4f<=%.4f contraction %.3f", tmp.lhs.value, tmp.rhs,
                 tmp.parameters.at("contraction"));
    if (tmp.pass) ++ok;
    return {ok == 4, fmt("%d/4 bounds hold at n=%ld:%s", ok, kSamples, parts.c_str())};
}

// Criterion 9: masses on disjoint regions are uncorrelated and occupancy
// factorizes under the reference measure; factorial moment bounds hold over
// 100 seeded runs at orders 1, 2, 4.
Outcome independence_and_moments() {
    const long kSamples = 30000;
    PartitionSpec part(1, 1.0, 1.0);
    MarkMeasure marks(1, 1.0, 2.0, 0.4);
    Region win = Region::box(1, {0}, {2});
    PoissonSpec ps(part, marks, win);
    Region regs[3] = {one_cube(0), one_cube(1), one_cube(2)};

    std::vector<std::array<double, 3>> tv(kSamples);
    std::vector<std::array<double, 3>> occ(kSamples);
    Rng r(916u);
    for (long i = 0; i < kSamples; ++i) {
        Configuration eta = sample_poisson(ps, r);
        for (int j = 0; j < 3; ++j) {
            tv[i][j] = tv_mass(eta, regs[j], part);
            occ[i][j] = project(eta, regs[j], part).size() >= 1 ? 1.0 : 0.0;
        }
    }

    bool pairwise_ok = true;
    double worst_pull = 0.0;
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            MeanVar ma, mb;
            for (long i = 0; i < kSamples; ++i) {
                ma.add(tv[i][a]);
                mb.add(tv[i][b]);
            }
            MeanVar mz;
            for (long i = 0; i < kSamples; ++i)
                mz.add((tv[i][a] - ma.mean()) * (tv[i][b] - mb.mean()));
            double pull = mz.stderror() > 0.0 ? std::abs(mz.mean()) / mz.stderror() : 0.0;
            worst_pull = std::max(worst_pull, pull);
            if (std::abs(mz.mean()) > 3.0 * mz.stderror() + 1e-12) pairwise_ok = false;
        }
    }

    MeanVar pj, pa, pb, pc;
    for (long i = 0; i < kSamples; ++i) {
        pj.add(occ[i][0] * occ[i][1] * occ[i][2]);
        pa.add(occ[i][0]);
        pb.add(occ[i][1]);
        pc.add(occ[i][2]);
    }
    double prod = pa.mean() * pb.mean() * pc.mean();
    double se_prod = std::sqrt(std::pow(pb.mean() * pc.mean() * pa.stderror(), 2) +
                               std::pow(pa.mean() * pc.mean() * pb.stderror(), 2) +
                               std::pow(pa.mean() * pb.mean() * pc.stderror(), 2));
    double fac_diff = pj.mean() - prod;
    double fac_sigma = pj.stderror() + se_prod;
    bool factor_ok = std::abs(fac_diff) <= 3.0 * fac_sigma + 1e-12;

    Vec h{0.6};
    CubeFunction psi(win, {1.0, 0.8, 0.5});
    long moment_failures = 0;
    Rng seeds(910u);
    for (int run = 0; run < 100; ++run) {
        Rng rr = seeds.child(static_cast<std::uint64_t>(run));
        for (int order : {1, 2, 4}) {
            MomentBoundCheck c = moment_bound_check(ps, h, psi, order, 2000,
                                                    rr.child(static_cast<std::uint64_t>(order)));
            if (!c.pass) ++moment_failures;
        }
    }

    bool pass = pairwise_ok && factor_ok && moment_failures == 0;
    return {pass, fmt("covariance pulls <= %.2f over 3 region pairs, occupancy factorization "
                      "diff %.4g (3 sigma %.2g), %ld/300 moment-bound failures",
                      worst_pull, fac_diff, 3.0 * fac_sigma, moment_failures)};
}

// Criterion 10: identical config and seed reproduce report.json and
// summary.csv byte for byte across full reruns.
Outcome report_determinism() {
    fs::path dir = "/tmp/vgibbs_accept/determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::path cfg = dir / "run.cfg";
    {
        std::ofstream os(cfg);
        os << "lambda = 0; 1\n"
              "suite = all\n"
              "n_samples = 3000\n"
              "seed = 7\n";
    }
    fs::path out = dir / "out";
    auto run_once = [&](const char* log) {
        std::string cmd = std::string(VGIBBS_CLI_PATH) + " run --config " + cfg.string() +
                          " --out " + out.string() + " --jobs 2 > " + (dir / log).string() +
                          " 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream is(p, std::ios::binary);
        std::ostringstream os;
        os << is.rdbuf();
        return os.str();
    };
    int s1 = run_once("run1.log");
    std::string rep1 = slurp(out / "report.json");
    std::string csv1 = slurp(out / "summary.csv");
    fs::remove_all(out);
    int s2 = run_once("run2.log");
    std::string rep2 = slurp(out / "report.json");
    std::string csv2 = slurp(out / "summary.csv");
    bool pass = s1 == 0 && s2 == 0 && !rep1.empty() && rep1 == rep2 && !csv1.empty() &&
                csv1 == csv2;
    return {pass, fmt("double-run exit %d/%d, report.json %s (%zu bytes), summary.csv %s (%zu bytes)",
                      s1, s2, rep1 == rep2 ? "identical" : "DIFFERS", rep1.size(),
                      csv1 == csv2 ? "identical" : "DIFFERS", csv1.size())};
}

}  // namespace

int main() {
    struct Row {
        const char* label;
        Outcome (*fn)();
    };
    const Row rows[] = {
        {"laplace identity", &laplace_identity},
        {"partition function bounds", &partition_bounds},
        {"hamiltonian oracle equivalence", &hamiltonian_equivalence},
        {"hamiltonian lower bound", &hamiltonian_lower_bound},
        {"sampler agreement", &sampler_agreement},
        {"kernel consistency", &kernel_consistency},
        {"dlr residual decay", &dlr_residual_decay},
        {"exponential moment bounds", &exponential_moments},
        {"independence and moment bounds", &independence_and_moments},
        {"report determinism", &report_determinism},
    };
    int passed = 0;
    const int total = static_cast<int>(sizeof rows / sizeof rows[0]);
    for (int i = 0; i < total; ++i) {
        Outcome o;
        try {
            o = rows[i].fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (o.pass) ++passed;
        std::printf("[%s] %2d/%d %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, total, rows[i].label,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d/%d criteria passed\n", passed == total ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                passed, total);
    return passed == total ? 0 : 1;
}
