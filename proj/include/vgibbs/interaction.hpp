#ifndef VGIBBS_INTERACTION_HPP
#define VGIBBS_INTERACTION_HPP

#include <memory>
#include <string>

#include "vgibbs/configuration.hpp"
#include "vgibbs/geometry.hpp"
#include "vgibbs/random.hpp"

namespace vgibbs {

// Certified constants of a pair potential: a global bound, a reach beyond
// which it vanishes, and a floor on the hard-core ball of diameter delta.
struct PotentialConstants {
    double sup_norm;   // ||phi||_inf
    double range;      // phi(x,y) = 0 whenever |x-y| > range
    double repulsion;  // phi(x,y) >= repulsion whenever |x-y| <= delta (0 if none claimed)
};

class PairPotential {
  public:
    virtual ~PairPotential() = default;

    virtual double eval(const Vec& x, const Vec& y, int dim) const = 0;
    virtual std::string kind() const = 0;

    const PotentialConstants& constants() const { return c_; }
    double sup_norm() const { return c_.sup_norm; }
    double range() const { return c_.range; }
    double repulsion() const { return c_.repulsion; }

  protected:
    explicit PairPotential(PotentialConstants c) : c_(c) {}
    PotentialConstants c_;
};

enum class PotentialKind { zero, hard_range, smooth_bump, broken_fr };

PotentialKind parse_potential_kind(const std::string& s);
std::string to_string(PotentialKind k);

// strength scales the potential; geometry (range, hard-core diameter) comes
// from the partition spec.  `broken_fr` deliberately under-declares its range
// and exists to exercise the validation path.
std::unique_ptr<PairPotential> make_potential(PotentialKind kind, double strength,
                                              const PartitionSpec& ps);

// Randomized audit of the declared constants (symmetry, sign, bound, reach,
// hard-core floor).  `ok == false` comes with a human-readable violation.
struct PotentialCheck {
    bool ok = true;
    std::string violation;
};
PotentialCheck verify_potential(const PairPotential& phi, const PartitionSpec& ps, Rng rng,
                                int n_pairs = 2000);

struct EnergyBreakdown {
    double bulk = 0.0;      // pairs inside lam (ordered double sum, diagonal included)
    double boundary = 0.0;  // 2 x (lam atoms vs boundary atoms outside lam)
    double total = 0.0;
};

// Relative energy of eta on lam given boundary condition xi outside lam.
// Cell-list evaluation over neighbor cubes; compensated summation.  The
// diagonal self-term phi(x,x)|v|^2 belongs to the double sum and is kept
// unless exclude_diagonal is set (sensitivity probes only).
EnergyBreakdown hamiltonian(const Configuration& eta, const Configuration& xi, const Region& lam,
                            const PairPotential& phi, const PartitionSpec& ps,
                            bool exclude_diagonal = false);

// Reference evaluator: plain quadratic loops, no spatial structure.  Kept
// deliberately independent of the cell-list path so they can be checked
// against each other.
EnergyBreakdown hamiltonian_all_pairs(const Configuration& eta, const Configuration& xi,
                                      const Region& lam, const PairPotential& phi,
                                      const PartitionSpec& ps, bool exclude_diagonal = false);

// Empty boundary condition on the halo of lam.
Configuration vacuum_boundary(const Region& lam, const PartitionSpec& ps);

// repulsion * sum over lam cubes of cube-mass^2; the certified floor on the
// bulk energy in the nonnegative-product regime.
double lower_bound_rhs(const Configuration& eta, const Region& lam, double repulsion,
                       const PartitionSpec& ps, MassMode mode = MassMode::tv);

// sup_norm * (tv(eta, lam) + tv(xi, halo))^2, an a-priori bound on |H|;
// checks the computed energy against it and returns the bound.
double finiteness_bound(const Configuration& eta, const Configuration& xi, const Region& lam,
                        const PairPotential& phi, const PartitionSpec& ps);

}  // namespace vgibbs

#endif
