#ifndef VGIBBS_CONFIGURATION_HPP
#define VGIBBS_CONFIGURATION_HPP

#include <map>
#include <vector>

#include "vgibbs/geometry.hpp"
#include "vgibbs/vec.hpp"

namespace vgibbs {

// One atom of a discrete vector-valued measure: unit point mass at x carrying
// the mark v (v != 0).
struct Atom {
    Vec x{};
    Vec v{};
};

// Finite atom list over a declared cube window.  The window is part of the
// identity: an empty configuration on a large window is different data than
// an empty configuration on a small one.
class Configuration {
  public:
    Configuration() = default;
    Configuration(int dim, Region window) : dim_(dim), window_(std::move(window)) {}

    // Validating constructor: finite coordinates, nonzero marks, distinct
    // positions, every atom inside the window.
    static Configuration checked(const PartitionSpec& ps, Region window, std::vector<Atom> atoms);

    // Fast path for sampler internals that construct valid data by design.
    static Configuration trusted(int dim, Region window, std::vector<Atom> atoms);

    int dim() const { return dim_; }
    const Region& window() const { return window_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

  private:
    int dim_ = 0;
    Region window_;
    std::vector<Atom> atoms_;
};

// Restriction to a sub-window (atoms whose cube lies in `sub`).
Configuration project(const Configuration& cfg, const Region& sub, const PartitionSpec& ps);

// Sum of marks over atoms located in `region`.
Vec vector_mass(const Configuration& cfg, const Region& region, const PartitionSpec& ps);

// Sum of |v| over atoms located in `region` (total-variation mass).
double tv_mass(const Configuration& cfg, const Region& region, const PartitionSpec& ps);
double tv_mass(const Configuration& cfg);

enum class MassMode { tv, vector_norm };

// Per-cube masses over the window; cubes without atoms report 0.
std::map<CubeIndex, double> cube_masses(const Configuration& cfg, const PartitionSpec& ps,
                                        MassMode mode);

// <h, eta(psi)> pairing: sum over atoms of <h, v> psi(x) for a
// piecewise-constant test function supported inside the window.
double pairing(const Configuration& cfg, const Vec& h, const CubeFunction& psi,
               const PartitionSpec& ps);

struct TemperednessReport {
    double alpha;
    MassMode mode;
    double value;  // sum over window cubes of mass(Q_k)^2 exp(-alpha |k|)
    std::map<CubeIndex, double> per_cube;
};

TemperednessReport temperedness(const Configuration& cfg, const PartitionSpec& ps, double alpha,
                                MassMode mode = MassMode::tv);

// inner restricted to lam, outer restricted to the complement, concatenated.
// The result's window is lam united with outer's window minus lam.
Configuration glue(const Configuration& inner, const Configuration& outer, const Region& lam,
                   const PartitionSpec& ps);

}  // namespace vgibbs

#endif
