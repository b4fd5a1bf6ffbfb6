#ifndef VGIBBS_RANDOM_HPP
#define VGIBBS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "vgibbs/vec.hpp"

namespace vgibbs {

// Deterministic RNG stream.  All distributions are implemented on top of the
// raw 64-bit output so results are reproducible bit-for-bit across platforms
// (libstdc++ / libc++ distribution objects are not portable, the engine is).
//
// Streams form a tree: child(key) derives a new independent stream from the
// parent's identity and the key only, never from how much the parent has
// consumed.  That keeps parallel work schedules out of the sample path.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : id_(mix(seed ^ 0x9e3779b97f4a7c15ull)), gen_(id_) {}

    // Derived stream. Depends on (parent id, key) only.
    Rng child(std::uint64_t key) const { return Rng(tag{}, mix(id_ + mix(key + 0x632be59bd9b4e019ull))); }

    std::uint64_t stream_id() const { return id_; }

    std::uint64_t raw() { return gen_(); }

    // Uniform on [0,1), 53-bit mantissa.
    double uniform01() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // index in [0, n)
    std::size_t pick(std::size_t n) {
        // multiply-shift; bias is ~n/2^64, irrelevant for our n
        return static_cast<std::size_t>((static_cast<unsigned __int128>(raw()) * n) >> 64);
    }

    double gaussian();
    long poisson(double mean);
    Vec on_sphere(int dim);

  private:
    struct tag {};
    Rng(tag, std::uint64_t id) : id_(id), gen_(id) {}

    static std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t id_;
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace vgibbs

#endif
