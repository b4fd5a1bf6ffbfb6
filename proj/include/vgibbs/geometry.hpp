#ifndef VGIBBS_GEOMETRY_HPP
#define VGIBBS_GEOMETRY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "vgibbs/vec.hpp"

namespace vgibbs {

// Partition of R^d into half-open cubes of edge g = delta / sqrt(d), so each
// cube has diameter exactly delta.  Cube k covers [g(k_i - 1/2), g(k_i + 1/2)).
struct PartitionSpec {
    int dim;
    double delta;  // cube diameter == hard-core scale of the model
    double range;  // interaction radius R
    double edge;   // derived: delta / sqrt(dim)

    PartitionSpec(int d, double delta_, double range_);

    double cube_volume() const;
};

struct CubeIndex {
    std::array<int, kMaxDim> k{};  // entries beyond dim stay zero

    auto operator<=>(const CubeIndex&) const = default;
};

struct CubeIndexHash {
    std::size_t operator()(const CubeIndex& c) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (int v : c.k) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ull +
                 (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// A finite set of cubes, stored sorted and duplicate-free.
class Region {
  public:
    Region() = default;
    explicit Region(std::vector<CubeIndex> cubes);

    // Axis-aligned block of cubes, lo..hi inclusive per axis (entries beyond
    // dim are ignored).
    static Region box(int dim, const std::array<int, kMaxDim>& lo,
                      const std::array<int, kMaxDim>& hi);

    bool contains(const CubeIndex& c) const;
    bool subset_of(const Region& other) const;
    bool intersects(const Region& other) const;
    std::size_t size() const { return cubes_.size(); }
    bool empty() const { return cubes_.empty(); }
    const std::vector<CubeIndex>& cubes() const { return cubes_; }
    auto begin() const { return cubes_.begin(); }
    auto end() const { return cubes_.end(); }

    Region unite(const Region& other) const;
    Region subtract(const Region& other) const;
    Region intersect(const Region& other) const;

    double volume(const PartitionSpec& ps) const;

    // Per-axis closed coordinate bounds of the union of cubes (for proposal
    // folding and point sampling).  Requires a non-empty region.
    void bounds(const PartitionSpec& ps, Vec& lo, Vec& hi) const;

    bool operator==(const Region&) const = default;

  private:
    std::vector<CubeIndex> cubes_;
};

CubeIndex cube_index(const Vec& x, const PartitionSpec& ps);
Vec cube_center(const CubeIndex& k, const PartitionSpec& ps);

// Minimal Euclidean distance between the closed hulls of two cubes.
double cube_distance(const CubeIndex& a, const CubeIndex& b, const PartitionSpec& ps);

// All cubes j != k whose closed hull comes within distance R of cube k's.
Region neighbor_cubes(const CubeIndex& k, const PartitionSpec& ps);

// Volume-based cap on the neighbor count: v_d * d^{d/2} * ceil(R/delta + 1)^d.
double interaction_parameter(const PartitionSpec& ps);

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

// Cubes outside `lam` that interact with it (neighbor set meets lam).
Region halo(const Region& lam, const PartitionSpec& ps);

// lam together with `rings` successive halo layers.
Region grow_by_halo(const Region& lam, const PartitionSpec& ps, int rings);

// Piecewise-constant test function: one value per cube of its support,
// zero elsewhere.
class CubeFunction {
  public:
    CubeFunction() = default;
    CubeFunction(Region support, std::vector<double> values);

    static CubeFunction indicator(Region support, double value = 1.0);

    double at(const CubeIndex& c) const;
    double operator()(const Vec& x, const PartitionSpec& ps) const;
    double sup_norm() const;
    const Region& support() const { return support_; }
    const std::vector<double>& values() const { return values_; }

  private:
    Region support_;
    std::vector<double> values_;  // aligned with support_.cubes()
};

}  // namespace vgibbs

#endif
