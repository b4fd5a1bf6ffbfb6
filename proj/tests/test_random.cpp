#include "doctest.h"

#include <cmath>
#include <vector>

#include "vgibbs/random.hpp"
#include "vgibbs/stats.hpp"
#include "vgibbs/vec.hpp"

using namespace vgibbs;

TEST_CASE("same seed reproduces the stream") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.raw() == b.raw());
}

TEST_CASE("different seeds decorrelate") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i)
    if (a.raw() == b.raw()) ++same;
  CHECK(same == 0);
}

TEST_CASE("child streams depend only on parent identity and key") {
  Rng parent1(9), parent2(9);
  for (int i = 0; i < 17; ++i) (void)parent1.raw();  // consume one copy only
  Rng c1 = parent1.child(5);
  Rng c2 = parent2.child(5);
  CHECK(c1.stream_id() == c2.stream_id());
  for (int i = 0; i < 32; ++i) CHECK(c1.raw() == c2.raw());
}

TEST_CASE("sibling and parent streams differ") {
  Rng parent(9);
  Rng a = parent.child(1);
  Rng b = parent.child(2);
  CHECK(a.stream_id() != b.stream_id());
  CHECK(a.stream_id() != parent.stream_id());
  CHECK(a.raw() != b.raw());
}

TEST_CASE("uniform01 range and mean") {
  Rng rng(31);
  MeanVar mv;
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    mv.add(u);
  }
  CHECK(std::abs(mv.mean() - 0.5) < 5 * std::sqrt(1.0 / 12 / 100000));
}

TEST_CASE("uniform interval") {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform(-3.0, -1.0);
    CHECK(u >= -3.0);
    CHECK(u < -1.0);
  }
}

TEST_CASE("gaussian moments") {
  Rng rng(33);
  MeanVar mv;
  double m3 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double g = rng.gaussian();
    mv.add(g);
    m3 += g * g * g;
  }
  m3 /= n;
  CHECK(std::abs(mv.mean()) < 5.0 / std::sqrt(double(n)));
  CHECK(mv.variance() == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::abs(m3) < 5 * std::sqrt(15.0 / n));
}

TEST_CASE("gaussian distribution shape") {
  Rng rng(34);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = rng.gaussian();
  auto res = ks_test(xs, [](double x) { return 1.0 - normal_sf(x); });
  CHECK(res.pvalue > 1e-4);
}

TEST_CASE("poisson small and chunked means") {
  Rng rng(35);
  const int n = 50000;
  MeanVar small, big;
  for (int i = 0; i < n; ++i) small.add(double(rng.poisson(4.0)));
  for (int i = 0; i < n; ++i) big.add(double(rng.poisson(45.0)));
  CHECK(std::abs(small.mean() - 4.0) < 5 * std::sqrt(4.0 / n));
  CHECK(std::abs(big.mean() - 45.0) < 5 * std::sqrt(45.0 / n));
  CHECK(small.variance() == doctest::Approx(4.0).epsilon(0.05));
  CHECK(big.variance() == doctest::Approx(45.0).epsilon(0.05));
}

TEST_CASE("poisson zero mean") {
  Rng rng(36);
  for (int i = 0; i < 100; ++i) CHECK(rng.poisson(0.0) == 0);
}

TEST_CASE("pick is uniform over residues") {
  Rng rng(37);
  const int n = 70000, k = 7;
  std::vector<double> counts(k, 0.0), expd(k, double(n) / k);
  for (int i = 0; i < n; ++i) counts[rng.pick(k)] += 1;
  CHECK(chi2_gof_pvalue(counts, expd) > 1e-5);
}

TEST_CASE("sphere draws are unit vectors") {
  for (int d : {1, 2, 3, 5}) {
    Rng rng(38 + d);
    Vec mean{};
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      Vec u = rng.on_sphere(d);
      CHECK(norm(u, d) == doctest::Approx(1.0).epsilon(1e-12));
      for (int j = 0; j < d; ++j) mean[j] += u[j] / n;
    }
    CHECK(norm(mean, d) < 6.0 / std::sqrt(double(n)));
  }
}
