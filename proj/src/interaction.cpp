#include "vgibbs/interaction.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "vgibbs/stats.hpp"

namespace vgibbs {

namespace {

class HardRangePotential final : public PairPotential {
  public:
    HardRangePotential(double s, double range, double delta)
        : PairPotential({s, range, delta <= range ? s : 0.0}), s_(s), range_(range) {}
    double eval(const Vec& x, const Vec& y, int dim) const override {
        return dist(x, y, dim) <= range_ ? s_ : 0.0;
    }
    std::string kind() const override { return "hard_range"; }

  private:
    double s_, range_;
};

class SmoothBumpPotential final : public PairPotential {
  public:
    SmoothBumpPotential(double s, double range, double delta)
        : PairPotential({s, range, floor_at(s, range, delta)}), s_(s), range_(range) {}
    double eval(const Vec& x, const Vec& y, int dim) const override {
        double r = dist(x, y, dim) / range_;
        if (r >= 1.0) return 0.0;
        double t = 1.0 - r * r;
        return s_ * t * t;
    }
    std::string kind() const override { return "smooth_bump"; }

  private:
    static double floor_at(double s, double range, double delta) {
        if (delta >= range) return 0.0;
        double t = 1.0 - (delta / range) * (delta / range);
        return s * t * t;
    }
    double s_, range_;
};

class ZeroPotential final : public PairPotential {
  public:
    explicit ZeroPotential(double range) : PairPotential({0.0, range, 0.0}) {}
    double eval(const Vec&, const Vec&, int) const override { return 0.0; }
    std::string kind() const override { return "zero"; }
};

// Declares half of its true reach.  Exists so the audit has something to
// catch; never use it for actual runs.
class BrokenRangePotential final : public PairPotential {
  public:
    BrokenRangePotential(double s, double declared_range, double delta)
        : PairPotential({s, declared_range, delta <= 2.0 * declared_range ? s : 0.0}),
          s_(s),
          true_range_(2.0 * declared_range) {}
    double eval(const Vec& x, const Vec& y, int dim) const override {
        return dist(x, y, dim) <= true_range_ ? s_ : 0.0;
    }
    std::string kind() const override { return "broken_fr"; }

  private:
    double s_, true_range_;
};

}  // namespace

PotentialKind parse_potential_kind(const std::string& s) {
    if (s == "zero") return PotentialKind::zero;
    if (s == "hard_range") return PotentialKind::hard_range;
    if (s == "smooth_bump") return PotentialKind::smooth_bump;
    if (s == "broken_fr") return PotentialKind::broken_fr;
    throw std::invalid_argument("unknown potential kind: " + s);
}

std::string to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::hard_range: return "hard_range";
        case PotentialKind::smooth_bump: return "smooth_bump";
        case PotentialKind::broken_fr: return "broken_fr";
    }
    throw std::logic_error("bad potential kind");
}

std::unique_ptr<PairPotential> make_potential(PotentialKind kind, double strength,
                                              const PartitionSpec& ps) {
    if (kind != PotentialKind::zero && (!(strength > 0.0) || !std::isfinite(strength)))
        throw std::domain_error("potential strength must be positive and finite");
    switch (kind) {
        case PotentialKind::zero: return std::make_unique<ZeroPotential>(ps.range);
        case PotentialKind::hard_range:
            return std::make_unique<HardRangePotential>(strength, ps.range, ps.delta);
        case PotentialKind::smooth_bump:
            return std::make_unique<SmoothBumpPotential>(strength, ps.range, ps.delta);
        case PotentialKind::broken_fr:
            return std::make_unique<BrokenRangePotential>(strength, ps.range, ps.delta);
    }
    throw std::logic_error("bad potential kind");
}

PotentialCheck verify_potential(const PairPotential& phi, const PartitionSpec& ps, Rng rng,
                                int n_pairs) {
    const double sup = phi.sup_norm();
    const double R = phi.range();
    const double A = phi.repulsion();
    const double L = 2.0 * (R + ps.delta);
    const double tol = 1e-12 * std::max(1.0, sup);
    for (int t = 0; t < n_pairs; ++t) {
        Vec x{};
        for (int i = 0; i < ps.dim; ++i) x[i] = rng.uniform(-L, L);
        // stratify the separation: inside the hard core, inside the reach,
        // beyond the reach
        double r;
        int band = static_cast<int>(rng.pick(3));
        if (band == 0)
            r = rng.uniform(0.0, ps.delta);
        else if (band == 1)
            r = rng.uniform(0.0, R);
        else
            r = R * (1.0 + 1e-9) + rng.uniform(0.0, R + ps.delta);
        Vec u = rng.on_sphere(ps.dim);
        Vec y = x;
        for (int i = 0; i < ps.dim; ++i) y[i] += r * u[i];

        double f = phi.eval(x, y, ps.dim);
        double fr = phi.eval(y, x, ps.dim);
        if (!std::isfinite(f))
            return {false, "non-finite value at separation " + std::to_string(r)};
        if (f < -tol) return {false, "negative value at separation " + std::to_string(r)};
        if (f > sup + tol)
            return {false, "value exceeds declared sup_norm at separation " + std::to_string(r)};
        if (std::abs(f - fr) > tol) return {false, "asymmetric at separation " + std::to_string(r)};
        double actual = dist(x, y, ps.dim);
        if (actual > R * (1.0 + 1e-12) && f != 0.0)
            return {false, "nonzero beyond declared range at separation " + std::to_string(actual)};
        if (A > 0.0 && actual <= ps.delta && f < A * (1.0 - 1e-12))
            return {false,
                    "below declared repulsion floor at separation " + std::to_string(actual)};
    }
    return {};
}

namespace {

using CellMap = std::map<CubeIndex, std::vector<std::size_t>>;

CellMap bucket_atoms(const std::vector<Atom>& atoms, const PartitionSpec& ps,
                     const Region& keep, bool inside) {
    CellMap m;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        CubeIndex k = cube_index(atoms[i].x, ps);
        if (keep.contains(k) == inside) m[k].push_back(i);
    }
    return m;
}

void check_domains(const Configuration& eta, const Configuration& xi, const Region& lam,
                   const PartitionSpec& ps) {
    if (eta.dim() != ps.dim || xi.dim() != ps.dim)
        throw std::domain_error("hamiltonian: dimension mismatch");
    if (!lam.subset_of(eta.window()))
        throw std::domain_error("hamiltonian: lam not contained in eta's window");
    Region h = halo(lam, ps);
    if (!h.subset_of(xi.window()) && !(xi.window().empty() && xi.size() == 0))
        throw std::domain_error("hamiltonian: boundary condition does not cover the halo");
}

}  // namespace

Configuration vacuum_boundary(const Region& lam, const PartitionSpec& ps) {
    return Configuration(ps.dim, halo(lam, ps));
}

EnergyBreakdown hamiltonian(const Configuration& eta, const Configuration& xi, const Region& lam,
                            const PairPotential& phi, const PartitionSpec& ps,
                            bool exclude_diagonal) {
    check_domains(eta, xi, lam, ps);
    const int d = ps.dim;
    const auto& ea = eta.atoms();
    const auto& xa = xi.atoms();
    CellMap bulk_cells = bucket_atoms(ea, ps, lam, true);
    CellMap bdry_cells = bucket_atoms(xa, ps, lam, false);

    std::map<CubeIndex, Region> nb;
    for (const auto& [k, _] : bulk_cells) nb.emplace(k, neighbor_cubes(k, ps));

    KahanSum bulk, bdry;
    for (const auto& [k, idx] : bulk_cells) {
        // within the cube: diagonal plus each unordered pair twice
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const Atom& A1 = ea[idx[a]];
            if (!exclude_diagonal)
                bulk.add(phi.eval(A1.x, A1.x, d) * norm2(A1.v, d));
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                const Atom& A2 = ea[idx[b]];
                bulk.add(2.0 * phi.eval(A1.x, A2.x, d) * dot(A1.v, A2.v, d));
            }
        }
        const Region& neigh = nb.at(k);
        for (const auto& j : neigh) {
            // cross-cube pairs once per unordered cube pair
            if (lam.contains(j) && k < j) {
                auto it = bulk_cells.find(j);
                if (it != bulk_cells.end()) {
                    for (std::size_t a : idx)
                        for (std::size_t b : it->second)
                            bulk.add(2.0 * phi.eval(ea[a].x, ea[b].x, d) *
                                     dot(ea[a].v, ea[b].v, d));
                }
            }
            if (!lam.contains(j)) {
                auto it = bdry_cells.find(j);
                if (it != bdry_cells.end()) {
                    for (std::size_t a : idx)
                        for (std::size_t b : it->second)
                            bdry.add(2.0 * phi.eval(ea[a].x, xa[b].x, d) *
                                     dot(ea[a].v, xa[b].v, d));
                }
            }
        }
    }
    EnergyBreakdown out;
    out.bulk = bulk.value();
    out.boundary = bdry.value();
    out.total = out.bulk + out.boundary;
    return out;
}

EnergyBreakdown hamiltonian_all_pairs(const Configuration& eta, const Configuration& xi,
                                      const Region& lam, const PairPotential& phi,
                                      const PartitionSpec& ps, bool exclude_diagonal) {
    check_domains(eta, xi, lam, ps);
    const int d = ps.dim;
    std::vector<Atom> in;
    for (const auto& a : eta.atoms())
        if (lam.contains(cube_index(a.x, ps))) in.push_back(a);
    std::vector<Atom> out_atoms;
    for (const auto& a : xi.atoms())
        if (!lam.contains(cube_index(a.x, ps))) out_atoms.push_back(a);

    double bulk = 0.0;
    for (const auto& a : in)
        for (const auto& b : in) {
            if (exclude_diagonal && &a == &b) continue;
            bulk += phi.eval(a.x, b.x, d) * dot(a.v, b.v, d);
        }
    double bdry = 0.0;
    for (const auto& a : in)
        for (const auto& b : out_atoms) bdry += 2.0 * phi.eval(a.x, b.x, d) * dot(a.v, b.v, d);

    EnergyBreakdown e;
    e.bulk = bulk;
    e.boundary = bdry;
    e.total = bulk + bdry;
    return e;
}

double lower_bound_rhs(const Configuration& eta, const Region& lam, double repulsion,
                       const PartitionSpec& ps, MassMode mode) {
    if (repulsion < 0.0) throw std::domain_error("lower_bound_rhs: repulsion must be >= 0");
    if (!lam.subset_of(eta.window()))
        throw std::domain_error("lower_bound_rhs: lam not contained in the window");
    auto masses = cube_masses(project(eta, lam, ps), ps, mode);
    KahanSum s;
    for (const auto& [k, m] : masses) s.add(m * m);
    return repulsion * s.value();
}

double finiteness_bound(const Configuration& eta, const Configuration& xi, const Region& lam,
                        const PairPotential& phi, const PartitionSpec& ps) {
    check_domains(eta, xi, lam, ps);
    double inner = tv_mass(eta, lam, ps);
    double outer = tv_mass(xi, halo(lam, ps), ps);
    double m = inner + outer;
    double bound = phi.sup_norm() * m * m;
    EnergyBreakdown e = hamiltonian(eta, xi, lam, phi, ps);
    if (std::abs(e.total) > bound * (1.0 + 1e-9) + 1e-12)
        throw std::logic_error("finiteness_bound: computed energy exceeds the a-priori bound");
    return bound;
}

}  // namespace vgibbs
