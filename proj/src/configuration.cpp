#include "vgibbs/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vgibbs/stats.hpp"

namespace vgibbs {

Configuration Configuration::checked(const PartitionSpec& ps, Region window,
                                     std::vector<Atom> atoms) {
    for (const auto& a : atoms) {
        if (!finite(a.x, ps.dim) || !finite(a.v, ps.dim))
            throw std::invalid_argument("configuration: non-finite atom data");
        if (!(norm2(a.v, ps.dim) > 0.0))
            throw std::invalid_argument("configuration: zero mark");
        if (!window.contains(cube_index(a.x, ps)))
            throw std::invalid_argument("configuration: atom outside declared window");
    }
    std::vector<const Atom*> byPos;
    byPos.reserve(atoms.size());
    for (const auto& a : atoms) byPos.push_back(&a);
    auto less = [&ps](const Atom* a, const Atom* b) {
        for (int i = 0; i < ps.dim; ++i) {
            if (a->x[i] != b->x[i]) return a->x[i] < b->x[i];
        }
        return false;
    };
    std::sort(byPos.begin(), byPos.end(), less);
    for (std::size_t i = 1; i < byPos.size(); ++i) {
        if (!less(byPos[i - 1], byPos[i]) && !less(byPos[i], byPos[i - 1]))
            throw std::invalid_argument("configuration: duplicate atom position");
    }
    Configuration c(ps.dim, std::move(window));
    c.atoms_ = std::move(atoms);
    return c;
}

Configuration Configuration::trusted(int dim, Region window, std::vector<Atom> atoms) {
    Configuration c(dim, std::move(window));
    c.atoms_ = std::move(atoms);
    return c;
}

Configuration project(const Configuration& cfg, const Region& sub, const PartitionSpec& ps) {
    if (!sub.subset_of(cfg.window()))
        throw std::domain_error("project: target region not contained in the window");
    std::vector<Atom> kept;
    for (const auto& a : cfg.atoms())
        if (sub.contains(cube_index(a.x, ps))) kept.push_back(a);
    return Configuration::trusted(cfg.dim(), sub, std::move(kept));
}

Vec vector_mass(const Configuration& cfg, const Region& region, const PartitionSpec& ps) {
    KahanSum acc[kMaxDim];
    for (const auto& a : cfg.atoms()) {
        if (!region.contains(cube_index(a.x, ps))) continue;
        for (int i = 0; i < ps.dim; ++i) acc[i].add(a.v[i]);
    }
    Vec out{};
    for (int i = 0; i < ps.dim; ++i) out[i] = acc[i].value();
    return out;
}

double tv_mass(const Configuration& cfg, const Region& region, const PartitionSpec& ps) {
    KahanSum acc;
    for (const auto& a : cfg.atoms())
        if (region.contains(cube_index(a.x, ps))) acc.add(norm(a.v, ps.dim));
    return acc.value();
}

double tv_mass(const Configuration& cfg) {
    KahanSum acc;
    for (const auto& a : cfg.atoms()) acc.add(norm(a.v, cfg.dim()));
    return acc.value();
}

std::map<CubeIndex, double> cube_masses(const Configuration& cfg, const PartitionSpec& ps,
                                        MassMode mode) {
    std::map<CubeIndex, Vec> sums;
    std::map<CubeIndex, double> out;
    for (const auto& k : cfg.window()) out[k] = 0.0;
    for (const auto& a : cfg.atoms()) {
        CubeIndex k = cube_index(a.x, ps);
        if (mode == MassMode::tv) {
            out[k] += norm(a.v, ps.dim);
        } else {
            Vec& s = sums[k];
            for (int i = 0; i < ps.dim; ++i) s[i] += a.v[i];
        }
    }
    if (mode == MassMode::vector_norm)
        for (const auto& [k, s] : sums) out[k] = norm(s, ps.dim);
    return out;
}

double pairing(const Configuration& cfg, const Vec& h, const CubeFunction& psi,
               const PartitionSpec& ps) {
    if (!psi.support().subset_of(cfg.window()))
        throw std::domain_error("pairing: test function support exceeds the window");
    KahanSum acc;
    for (const auto& a : cfg.atoms()) {
        double w = psi.at(cube_index(a.x, ps));
        if (w != 0.0) acc.add(w * dot(h, a.v, ps.dim));
    }
    return acc.value();
}

TemperednessReport temperedness(const Configuration& cfg, const PartitionSpec& ps, double alpha,
                                MassMode mode) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("temperedness: alpha must be positive and finite");
    TemperednessReport rep;
    rep.alpha = alpha;
    rep.mode = mode;
    rep.per_cube = cube_masses(cfg, ps, mode);
    KahanSum acc;
    for (const auto& [k, m] : rep.per_cube) {
        double kk = 0.0;
        for (int i = 0; i < ps.dim; ++i)
            kk += static_cast<double>(k.k[i]) * static_cast<double>(k.k[i]);
        acc.add(m * m * std::exp(-alpha * std::sqrt(kk)));
    }
    rep.value = acc.value();
    return rep;
}

Configuration glue(const Configuration& inner, const Configuration& outer, const Region& lam,
                   const PartitionSpec& ps) {
    if (!lam.subset_of(inner.window()))
        throw std::domain_error("glue: lam not contained in the inner window");
    std::vector<Atom> atoms;
    for (const auto& a : inner.atoms())
        if (lam.contains(cube_index(a.x, ps))) atoms.push_back(a);
    for (const auto& a : outer.atoms())
        if (!lam.contains(cube_index(a.x, ps))) atoms.push_back(a);
    Region window = lam.unite(outer.window().subtract(lam));
    return Configuration::trusted(ps.dim, std::move(window), std::move(atoms));
}

}  // namespace vgibbs
