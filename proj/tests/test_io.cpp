#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "vgibbs/io.hpp"
#include "vgibbs/random.hpp"
#include "vgibbs/reference_measure.hpp"

using namespace vgibbs;

TEST_CASE("format_double round-trips exactly") {
    for (double x : {0.0, 1.0, -1.0, 0.1, 1e-300, -2.5e17, 3.141592653589793,
                     0.30000000000000004, 1e17, 4.9406564584124654e-324}) {
        std::string s = format_double(x);
        double back = 0.0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc{});
        CHECK(back == x);
        CHECK(s.find(',') == std::string::npos);
    }
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-3.0) == "-3");
}

TEST_CASE("configurations survive a text round trip bit for bit") {
    PartitionSpec ps(2, 1.0, 1.0);
    MarkMeasure marks(2, 2.0, 1.5, 0.3);
    Region win = Region::box(2, {-1, -1}, {1, 1});
    Rng rng(21u);
    Configuration cfg = sample_poisson(PoissonSpec(ps, marks, win), rng);

    std::ostringstream os;
    write_configuration(cfg, ps, os);
    std::istringstream is(os.str());
    Configuration back = read_configuration(is, ps);

    REQUIRE(back.size() == cfg.size());
    CHECK(back.dim() == cfg.dim());
    CHECK(back.window().size() == cfg.window().size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        for (int c = 0; c < 2; ++c) {
            CHECK(back.atoms()[i].x[c] == cfg.atoms()[i].x[c]);
            CHECK(back.atoms()[i].v[c] == cfg.atoms()[i].v[c]);
        }
    }

    // a second write of the reread data is byte-identical
    std::ostringstream os2;
    write_configuration(back, ps, os2);
    CHECK(os.str() == os2.str());
}

TEST_CASE("empty configurations and comments parse") {
    PartitionSpec ps(1, 1.0, 1.0);
    Configuration empty(1, Region::box(1, {0}, {1}));
    std::ostringstream os;
    write_configuration(empty, ps, os);
    std::istringstream is(os.str());
    Configuration back = read_configuration(is, ps);
    CHECK(back.size() == 0);
    CHECK(back.window().size() == 2);

    std::istringstream commented(
        "# boundary data\n"
        "dim 1\n"
        "\n"
        "window 2\n"
        "0\n"
        "1\n"
        "# one atom\n"
        "atoms 1\n"
        "0.25 -1.5\n");
    Configuration c = read_configuration(commented, ps);
    REQUIRE(c.size() == 1);
    CHECK(c.atoms()[0].x[0] == 0.25);
    CHECK(c.atoms()[0].v[0] == -1.5);
}

TEST_CASE("reader rejects malformed input by name") {
    PartitionSpec ps(1, 1.0, 1.0);
    auto expect_error = [&ps](const std::string& text, const std::string& needle) {
        std::istringstream is(text);
        try {
            read_configuration(is, ps);
            FAIL_CHECK("expected failure for: ", text);
        } catch (const std::exception& e) {
            INFO("message: ", e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("dim 2\nwindow 0\natoms 0\n", "dimension");
    expect_error("window 1\n0\natoms 0\n", "dim");
    expect_error("dim 1\nwindow 1\n0\natoms 2\n0.1 1.0\n", "truncated");
    expect_error("dim 1\nwindow 1\n0\natoms 1\n0.1 zebra\n", "bad");
    expect_error("dim 1\nwindow 1\n0\natoms 1\n5.0 1.0\n", "window");
    // zero marks are invalid atoms
    expect_error("dim 1\nwindow 1\n0\natoms 1\n0.1 0.0\n", "zero mark");
}

TEST_CASE("file round trip") {
    PartitionSpec ps(1, 1.0, 1.0);
    Region win = Region::box(1, {0}, {2});
    Configuration cfg = Configuration::checked(
        ps, win, {Atom{Vec{0.125}, Vec{2.5}}, Atom{Vec{1.75}, Vec{-0.0625}}});
    const std::string path = "/tmp/vgibbs_io_test.txt";
    write_configuration_file(cfg, ps, path);
    Configuration back = read_configuration_file(path, ps);
    REQUIRE(back.size() == 2);
    CHECK(back.atoms()[1].v[0] == -0.0625);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_configuration_file("/tmp/does_not_exist_vgibbs.txt", ps),
                    std::runtime_error);
}
