#include "vgibbs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vgibbs {

PartitionSpec::PartitionSpec(int d, double delta_, double range_)
    : dim(d), delta(delta_), range(range_), edge(delta_ / std::sqrt(static_cast<double>(d))) {
    if (d < 1 || d > kMaxDim) throw std::domain_error("PartitionSpec: dim out of range");
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::domain_error("PartitionSpec: delta must be positive and finite");
    if (!(range > 0.0) || !std::isfinite(range))
        throw std::domain_error("PartitionSpec: range must be positive and finite");
}

double PartitionSpec::cube_volume() const {
    double v = 1.0;
    for (int i = 0; i < dim; ++i) v *= edge;
    return v;
}

Region::Region(std::vector<CubeIndex> cubes) : cubes_(std::move(cubes)) {
    std::sort(cubes_.begin(), cubes_.end());
    cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
}

Region Region::box(int dim, const std::array<int, kMaxDim>& lo,
                   const std::array<int, kMaxDim>& hi) {
    if (dim < 1 || dim > kMaxDim) throw std::domain_error("Region::box: dim out of range");
    for (int i = 0; i < dim; ++i)
        if (lo[i] > hi[i]) throw std::invalid_argument("Region::box: lo > hi");
    std::vector<CubeIndex> out;
    CubeIndex cur{};
    for (int i = 0; i < dim; ++i) cur.k[i] = lo[i];
    for (;;) {
        out.push_back(cur);
        int axis = 0;
        while (axis < dim) {
            if (++cur.k[axis] <= hi[axis]) break;
            cur.k[axis] = lo[axis];
            ++axis;
        }
        if (axis == dim) break;
    }
    return Region(std::move(out));
}

bool Region::contains(const CubeIndex& c) const {
    return std::binary_search(cubes_.begin(), cubes_.end(), c);
}

bool Region::subset_of(const Region& other) const {
    return std::includes(other.cubes_.begin(), other.cubes_.end(), cubes_.begin(), cubes_.end());
}

bool Region::intersects(const Region& other) const {
    auto i = cubes_.begin();
    auto j = other.cubes_.begin();
    while (i != cubes_.end() && j != other.cubes_.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

Region Region::unite(const Region& other) const {
    std::vector<CubeIndex> out;
    out.reserve(cubes_.size() + other.cubes_.size());
    std::set_union(cubes_.begin(), cubes_.end(), other.cubes_.begin(), other.cubes_.end(),
                   std::back_inserter(out));
    Region r;
    r.cubes_ = std::move(out);
    return r;
}

Region Region::subtract(const Region& other) const {
    std::vector<CubeIndex> out;
    std::set_difference(cubes_.begin(), cubes_.end(), other.cubes_.begin(), other.cubes_.end(),
                        std::back_inserter(out));
    Region r;
    r.cubes_ = std::move(out);
    return r;
}

Region Region::intersect(const Region& other) const {
    std::vector<CubeIndex> out;
    std::set_intersection(cubes_.begin(), cubes_.end(), other.cubes_.begin(), other.cubes_.end(),
                          std::back_inserter(out));
    Region r;
    r.cubes_ = std::move(out);
    return r;
}

double Region::volume(const PartitionSpec& ps) const {
    return static_cast<double>(cubes_.size()) * ps.cube_volume();
}

void Region::bounds(const PartitionSpec& ps, Vec& lo, Vec& hi) const {
    if (cubes_.empty()) throw std::domain_error("Region::bounds: empty region");
    for (int i = 0; i < ps.dim; ++i) {
        int klo = cubes_.front().k[i], khi = klo;
        for (const auto& c : cubes_) {
            klo = std::min(klo, c.k[i]);
            khi = std::max(khi, c.k[i]);
        }
        lo[i] = ps.edge * (static_cast<double>(klo) - 0.5);
        hi[i] = ps.edge * (static_cast<double>(khi) + 0.5);
    }
}

CubeIndex cube_index(const Vec& x, const PartitionSpec& ps) {
    CubeIndex c{};
    for (int i = 0; i < ps.dim; ++i)
        c.k[i] = static_cast<int>(std::floor(x[i] / ps.edge + 0.5));
    return c;
}

Vec cube_center(const CubeIndex& k, const PartitionSpec& ps) {
    Vec x{};
    for (int i = 0; i < ps.dim; ++i) x[i] = ps.edge * static_cast<double>(k.k[i]);
    return x;
}

double cube_distance(const CubeIndex& a, const CubeIndex& b, const PartitionSpec& ps) {
    double s = 0.0;
    for (int i = 0; i < ps.dim; ++i) {
        double gap = ps.edge * std::max(0.0, std::abs(static_cast<double>(a.k[i] - b.k[i])) - 1.0);
        s += gap * gap;
    }
    return std::sqrt(s);
}

Region neighbor_cubes(const CubeIndex& k, const PartitionSpec& ps) {
    // per-axis reach: (|dk| - 1) g <= R
    const int reach = static_cast<int>(std::floor(ps.range / ps.edge)) + 1;
    std::vector<CubeIndex> out;
    std::array<int, kMaxDim> off{};
    for (int i = 0; i < ps.dim; ++i) off[i] = -reach;
    for (;;) {
        CubeIndex j = k;
        bool same = true;
        for (int i = 0; i < ps.dim; ++i) {
            j.k[i] += off[i];
            same = same && off[i] == 0;
        }
        if (!same && cube_distance(k, j, ps) <= ps.range) out.push_back(j);
        int axis = 0;
        while (axis < ps.dim) {
            if (++off[axis] <= reach) break;
            off[axis] = -reach;
            ++axis;
        }
        if (axis == ps.dim) break;
    }
    return Region(std::move(out));
}

double unit_ball_volume(int d) {
    if (d < 1) throw std::domain_error("unit_ball_volume: d >= 1");
    const double pi = 3.14159265358979323846;
    if (d % 2 == 0) {
        double v = 1.0;
        for (int i = 1; i <= d / 2; ++i) v *= pi / static_cast<double>(i);
        return v;
    }
    // odd d: 2 (2 pi)^{(d-1)/2} / d!!
    double v = 2.0;
    for (int i = 3; i <= d; i += 2) v *= 2.0 * pi / static_cast<double>(i);
    return v;
}

double interaction_parameter(const PartitionSpec& ps) {
    double cells = std::ceil(ps.range / ps.delta + 1.0);
    double v = unit_ball_volume(ps.dim);
    for (int i = 0; i < ps.dim; ++i) v *= std::sqrt(static_cast<double>(ps.dim)) * cells;
    return v;
}

Region halo(const Region& lam, const PartitionSpec& ps) {
    // The neighbor relation is symmetric, so the halo is the union of
    // neighborhoods minus the region itself.
    std::vector<CubeIndex> out;
    for (const auto& k : lam) {
        Region nb = neighbor_cubes(k, ps);
        for (const auto& j : nb)
            if (!lam.contains(j)) out.push_back(j);
    }
    return Region(std::move(out));
}

Region grow_by_halo(const Region& lam, const PartitionSpec& ps, int rings) {
    if (rings < 0) throw std::domain_error("grow_by_halo: rings >= 0");
    Region r = lam;
    for (int i = 0; i < rings; ++i) r = r.unite(halo(r, ps));
    return r;
}

CubeFunction::CubeFunction(Region support, std::vector<double> values)
    : support_(std::move(support)), values_(std::move(values)) {
    if (support_.size() != values_.size())
        throw std::invalid_argument("CubeFunction: one value per support cube required");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("CubeFunction: values must be finite");
}

CubeFunction CubeFunction::indicator(Region support, double value) {
    std::vector<double> vals(support.size(), value);
    return CubeFunction(std::move(support), std::move(vals));
}

double CubeFunction::at(const CubeIndex& c) const {
    const auto& cs = support_.cubes();
    auto it = std::lower_bound(cs.begin(), cs.end(), c);
    if (it == cs.end() || *it != c) return 0.0;
    return values_[static_cast<std::size_t>(it - cs.begin())];
}

double CubeFunction::operator()(const Vec& x, const PartitionSpec& ps) const {
    return at(cube_index(x, ps));
}

double CubeFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace vgibbs
