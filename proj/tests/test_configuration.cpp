#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "vgibbs/configuration.hpp"

using namespace vgibbs;

namespace {

Atom at(double x, double v) { return Atom{Vec{x}, Vec{v}}; }
Atom at2(double x0, double x1, double v0, double v1) { return Atom{Vec{x0, x1}, Vec{v0, v1}}; }

}  // namespace

TEST_CASE("checked constructor validates atom data") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {2});

    Configuration ok = Configuration::checked(ps, win, {at(0.1, 1.0), at(1.2, -2.0)});
    CHECK(ok.size() == 2);
    CHECK(ok.dim() == 1);
    CHECK(ok.window().size() == 3);

    CHECK_THROWS_AS(Configuration::checked(ps, win, {at(0.1, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(
        Configuration::checked(ps, win, {Atom{Vec{std::nan("")}, Vec{1.0}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        Configuration::checked(ps, win, {Atom{Vec{0.1}, Vec{std::numeric_limits<double>::infinity()}}}),
        std::invalid_argument);
    // cube 3 is outside the declared window [0, 2]
    CHECK_THROWS_AS(Configuration::checked(ps, win, {at(3.1, 1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration::checked(ps, win, {at(0.1, 1.0), at(0.1, 2.0)}),
                    std::invalid_argument);
    // same cube but distinct positions is fine
    CHECK_NOTHROW(Configuration::checked(ps, win, {at(0.1, 1.0), at(0.2, 2.0)}));
}

TEST_CASE("masses by hand") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {3});
    // cube 0: marks +2 and -2 (cancel in vector mass, add in tv)
    // cube 2: mark +3
    Configuration cfg = Configuration::checked(
        ps, win, {at(0.1, 2.0), at(-0.2, -2.0), at(2.3, 3.0)});

    Vec vm = vector_mass(cfg, win, ps);
    CHECK(vm[0] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(tv_mass(cfg, win, ps) == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(tv_mass(cfg) == doctest::Approx(7.0).epsilon(1e-15));

    Region left = Region::box(1, {0}, {0});
    CHECK(vector_mass(cfg, left, ps)[0] == doctest::Approx(0.0));
    CHECK(tv_mass(cfg, left, ps) == doctest::Approx(4.0));

    auto tv = cube_masses(cfg, ps, MassMode::tv);
    auto vn = cube_masses(cfg, ps, MassMode::vector_norm);
    CHECK(tv.size() == 4);  // every window cube reports, empty ones as zero
    CubeIndex k0{}, k1{}, k2{};
    k1.k[0] = 1;
    k2.k[0] = 2;
    CHECK(tv[k0] == doctest::Approx(4.0));
    CHECK(tv[k1] == doctest::Approx(0.0));
    CHECK(tv[k2] == doctest::Approx(3.0));
    CHECK(vn[k0] == doctest::Approx(0.0));  // +2 and -2 cancel
    CHECK(vn[k2] == doctest::Approx(3.0));
}

TEST_CASE("masses in two dimensions use euclidean mark norms") {
    PartitionSpec ps(2, 1.0, 1.0);
    Region win = Region::box(2, {0, 0}, {0, 0});
    Configuration cfg =
        Configuration::checked(ps, win, {at2(0.1, 0.0, 3.0, 4.0), at2(-0.1, 0.1, -3.0, -4.0)});
    CHECK(tv_mass(cfg) == doctest::Approx(10.0));
    Vec vm = vector_mass(cfg, win, ps);
    CHECK(vm[0] == doctest::Approx(0.0));
    CHECK(vm[1] == doctest::Approx(0.0));
    auto vn = cube_masses(cfg, ps, MassMode::vector_norm);
    CHECK(vn[CubeIndex{}] == doctest::Approx(0.0));
}

TEST_CASE("project keeps exactly the atoms of the sub-window") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {3});
    Configuration cfg = Configuration::checked(
        ps, win, {at(0.1, 1.0), at(1.1, 2.0), at(3.2, 4.0)});
    Region sub = Region::box(1, {1}, {3});
    Configuration p = project(cfg, sub, ps);
    CHECK(p.size() == 2);
    CHECK(p.window().size() == 3);
    CHECK(tv_mass(p) == doctest::Approx(6.0));

    Region outside = Region::box(1, {3}, {4});
    CHECK_THROWS_AS(project(cfg, outside, ps), std::domain_error);
}

TEST_CASE("pairing is the mark-weighted test function sum") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {2});
    Configuration cfg = Configuration::checked(
        ps, win, {at(0.0, 2.0), at(1.0, -1.0), at(2.0, 5.0)});
    CubeFunction psi(Region::box(1, {0}, {1}), {0.5, 3.0});
    Vec h{2.0};
    // 2*2*0.5 + 2*(-1)*3 + 0 = 2 - 6 = -4
    CHECK(pairing(cfg, h, psi, ps) == doctest::Approx(-4.0).epsilon(1e-15));

    CubeFunction wide = CubeFunction::indicator(Region::box(1, {0}, {5}), 1.0);
    CHECK_THROWS_AS(pairing(cfg, h, wide, ps), std::domain_error);
}

TEST_CASE("temperedness sums squared cube masses with exponential decay") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {3});
    Configuration cfg = Configuration::checked(
        ps, win, {at(0.1, 2.0), at(-0.2, 1.0), at(3.1, -4.0)});
    double a = 0.7;
    TemperednessReport rep = temperedness(cfg, ps, a, MassMode::tv);
    // cube 0 tv mass 3, cube 3 tv mass 4
    double want = 9.0 + 16.0 * std::exp(-a * 3.0);
    CHECK(rep.value == doctest::Approx(want).epsilon(1e-14));
    CHECK(rep.per_cube.size() == 4);

    TemperednessReport vn = temperedness(cfg, ps, a, MassMode::vector_norm);
    CHECK(vn.value == doctest::Approx(want).epsilon(1e-14));  // no cancellation here

    CHECK_THROWS_AS(temperedness(cfg, ps, 0.0), std::domain_error);
    CHECK_THROWS_AS(temperedness(cfg, ps, -1.0), std::domain_error);
}

TEST_CASE("temperedness uses euclidean cube distance in two dimensions") {
    PartitionSpec ps(2, 1.0, 1.0);
    Region win = Region::box(2, {0, 0}, {3, 4});
    std::vector<Atom> atoms = {at2(3.0 * ps.edge, 4.0 * ps.edge, 0.0, 2.0)};
    Configuration cfg = Configuration::checked(ps, win, atoms);
    TemperednessReport rep = temperedness(cfg, ps, 1.0);
    CHECK(rep.value == doctest::Approx(4.0 * std::exp(-5.0)).epsilon(1e-14));
}

TEST_CASE("glue takes the inside from one configuration and the outside from the other") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region lam = Region::box(1, {0}, {1});
    Region inwin = Region::box(1, {0}, {1});
    Region outwin = Region::box(1, {0}, {4});
    Configuration inner = Configuration::checked(ps, inwin, {at(0.1, 1.0), at(1.1, 2.0)});
    Configuration outer = Configuration::checked(
        ps, outwin, {at(0.4, 100.0), at(2.1, 4.0), at(4.2, 8.0)});

    Configuration g = glue(inner, outer, lam, ps);
    CHECK(g.size() == 4);  // inner's two in lam, outer's two outside lam
    CHECK(tv_mass(g) == doctest::Approx(15.0));
    CHECK(g.window().size() == 5);  // lam united with outer window minus lam
    CHECK(tv_mass(g, lam, ps) == doctest::Approx(3.0));

    Region big = Region::box(1, {0}, {9});
    CHECK_THROWS_AS(glue(inner, outer, big, ps), std::domain_error);
}

TEST_CASE("empty configurations behave as zero measures") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {1});
    Configuration cfg(1, win);
    CHECK(cfg.size() == 0);
    CHECK(tv_mass(cfg) == 0.0);
    CHECK(vector_mass(cfg, win, ps)[0] == 0.0);
    auto m = cube_masses(cfg, ps, MassMode::tv);
    CHECK(m.size() == 2);
    for (const auto& [k, v] : m) CHECK(v == 0.0);
    CHECK(temperedness(cfg, ps, 0.5).value == 0.0);
}
