#include <cmath>
#include <cstdlib>
#include <random>

#include <doctest.h>

#include "spectrakit/numeric.hpp"

using namespace spectrakit;

TEST_CASE("frac_turns wraps into [0,1)") {
    CHECK(frac_turns(0.0) == 0.0);
    CHECK(frac_turns(1.0) == 0.0);
    CHECK(frac_turns(1.25) == 0.25);
    CHECK(frac_turns(-0.25) == 0.75);
    CHECK(frac_turns(-3.0) == 0.0);
    CHECK(frac_turns(7.5) == 0.5);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        double x = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 20.0;
        double f = frac_turns(x);
        CHECK(f >= 0.0);
        CHECK(f < 1.0);
    }
}

TEST_CASE("phase_distance is the shorter arc in turns") {
    CHECK(phase_distance(0.0, 0.0) == 0.0);
    CHECK(phase_distance(0.9, 0.1) == doctest::Approx(0.2));
    CHECK(phase_distance(0.1, 0.9) == doctest::Approx(0.2));
    CHECK(phase_distance(0.0, 0.5) == doctest::Approx(0.5));
    CHECK(phase_distance(0.25, 0.75) == doctest::Approx(0.5));
}

TEST_CASE("log-polar round trips through cartesian") {
    auto p = LogPolar::from_cartesian(-2.0, 0.0);
    CHECK(p.logmod == doctest::Approx(std::log(2.0)));
    CHECK(p.phase == doctest::Approx(0.5));

    auto q = LogPolar::from_cartesian(1.0, 0.0);
    CHECK(q.logmod == 0.0);
    CHECK(q.phase == 0.0);

    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        double re = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 8.0;
        double im = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 8.0;
        if (re == 0.0 && im == 0.0) continue;
        auto lp = LogPolar::from_cartesian(re, im);
        auto z = lp.to_cartesian();
        CHECK(z.real() == doctest::Approx(re).epsilon(1e-12));
        CHECK(z.imag() == doctest::Approx(im).epsilon(1e-12));
    }
}

TEST_CASE("log_mul and log_pow compose moduli additively and phases mod 1") {
    LogPolar a{0.5, 0.75};
    LogPolar b{-0.25, 0.5};
    auto m = log_mul(a, b);
    CHECK(m.logmod == 0.25);
    CHECK(m.phase == 0.25);

    auto p = log_pow(a, 4);
    CHECK(p.logmod == 2.0);
    CHECK(p.phase == 0.0);
}

TEST_CASE("mean ratios compare exactly by cross multiplication") {
    MeanRatio half{1.0, 2};
    MeanRatio same{2.0, 4};
    MeanRatio third{1.0, 3};
    CHECK(compare(half, same) == 0);
    CHECK(compare(third, half) < 0);
    CHECK(compare(half, third) > 0);
    CHECK(half.value() == 0.5);
    CHECK(MeanRatio{-3.0, 4}.value() == -0.75);
}

TEST_CASE("format_double emits shortest round-trip decimals") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-2.0) == "-2");
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        double x = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 100.0;
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}
