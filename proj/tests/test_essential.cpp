#include <doctest.h>

#include "spectrakit/classifier.hpp"
#include "spectrakit/cycle_means.hpp"
#include "spectrakit/essential.hpp"
#include "spectrakit/resolvent.hpp"
#include "support/fixtures.hpp"
#include "support/random_systems.hpp"

using namespace spectrakit;
using testkit::kLn2;

TEST_CASE("the drifting orbit separates the first four levels") {
    System sys{testkit::shift2_description()};
    auto ess = essential_spectra(sys);

    SpectralSet circles;
    circles.add_interval(-kLn2, -kLn2);
    circles.add_interval(kLn2, kLn2);
    CHECK(ess.sigma1 == circles);
    CHECK(ess.sigma2 == circles);
    CHECK(ess.sigma3 == circles);

    SpectralSet annulus = SpectralSet::annulus(-kLn2, kLn2);
    CHECK(ess.sigma4 == annulus);
    CHECK(ess.sigma5 == annulus);
    CHECK(ess.sigma_term.is_empty());
    CHECK(ess.rho_e == kLn2);
}

TEST_CASE("an aperiodic block pins all five levels to its annulus") {
    System sys{testkit::aperiodic_zero_description()};
    auto ess = essential_spectra(sys);
    SpectralSet circle = SpectralSet::circle(0.0);
    CHECK(ess.sigma1 == circle);
    CHECK(ess.sigma2 == circle);
    CHECK(ess.sigma3 == circle);
    CHECK(ess.sigma4 == circle);
    CHECK(ess.sigma5 == circle);
    CHECK(ess.rho_e == 0.0);
}

TEST_CASE("opposite orbits cancel in the index but not in the hull") {
    System sys{testkit::opposite_pair_description()};
    auto ess = essential_spectra(sys);
    SpectralSet circles;
    circles.add_interval(-kLn2, -kLn2);
    circles.add_interval(kLn2, kLn2);
    CHECK(ess.sigma3 == circles);
    CHECK(ess.sigma4 == circles);
    CHECK(ess.sigma5 == SpectralSet::annulus(-kLn2, kLn2));
    CHECK(ess.rho_e == kLn2);

    // The gap is fredholm of index zero but not resolvent.
    auto rep = classify(sys, LogPolar{0.0, 0.125});
    CHECK(rep.status == FredholmReport::Status::Fredholm);
    CHECK(rep.nul == 1);
    CHECK(rep.def == 1);
    CHECK(rep.index == 0);
}

TEST_CASE("purely discrete spectra leave every essential level empty") {
    System sys{testkit::isolated_p2_description()};
    auto ess = essential_spectra(sys);
    CHECK(ess.sigma1.is_empty());
    CHECK(ess.sigma5.is_empty());
    CHECK_FALSE(ess.rho_e.has_value());
    CHECK(sigma5_from_components(ess.sigma1, full_spectrum(sys)).is_empty());
}

TEST_CASE("period products contribute roots and scaled bands") {
    SUBCASE("no clopen blocks, empty term") {
        System sys{testkit::shift2_description()};
        CHECK(sigma_term(sys).is_empty());
    }
    SUBCASE("point products take roots") {
        SystemDescription d;
        d.blocks.push_back(ClopenPeriodicBlock{"p", 2, {PointProduct{2.0 * kLn2, 0.0}}});
        System sys{d};
        auto term = sigma_term(sys);
        SpectralSet expect;
        expect.add_point({kLn2, 0.0});
        expect.add_point({kLn2, 0.5});
        CHECK(term == expect);
        // Inside every essential level.
        auto ess = essential_spectra(sys);
        CHECK(set_subset(term, ess.sigma1));
        CHECK(ess.rho_e == kLn2);
    }
    SUBCASE("bands scale to annuli") {
        SystemDescription d;
        d.blocks.push_back(ClopenPeriodicBlock{"p", 1, {ModulusBand{0.0, kLn2}}});
        System sys{d};
        CHECK(sigma_term(sys) == SpectralSet::annulus(0.0, kLn2));
    }
}

TEST_CASE("point contributions are closed under their period's roots of unity") {
    testkit::Rng rng(81);
    for (int iter = 0; iter < 30; ++iter) {
        long p = rng.range(1, 4);
        SystemDescription d;
        d.blocks.push_back(
            ClopenPeriodicBlock{"p", static_cast<int>(p),
                                {PointProduct{rng.dyadic_logmod(), rng.dyadic_phase()}}});
        System sys{d};
        auto term = sigma_term(sys);
        REQUIRE(term.points().size() == static_cast<size_t>(p));
        for (const auto& pt : term.points()) {
            // Rotating by one p-th of a turn lands on another stored root,
            // up to the rounding of the two different phase routes.
            double next = frac_turns(pt.phase + 1.0 / static_cast<double>(p));
            bool found = false;
            for (const auto& q : term.points()) {
                found = found || (q.logmod == pt.logmod &&
                                  phase_distance(q.phase, next) <= 1e-12);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("zero weights refuse the essential computation") {
    auto d = testkit::shift2_description();
    d.trajectories[0].core = {std::nullopt};
    System sys{d};
    CHECK_THROWS_AS(essential_spectra(sys), UnsupportedError);
}

TEST_CASE("the five levels nest and share their extreme radius") {
    testkit::Rng rng(82);
    for (int iter = 0; iter < 60; ++iter) {
        auto d = testkit::random_description(rng);
        System sys{d};
        auto ess = essential_spectra(sys);
        auto spec = full_spectrum(sys);
        CHECK(set_subset(ess.sigma1, ess.sigma2));
        CHECK(set_subset(ess.sigma2, ess.sigma3));
        CHECK(set_subset(ess.sigma3, ess.sigma4));
        CHECK(set_subset(ess.sigma4, ess.sigma5));
        CHECK(set_subset(ess.sigma5, spec));
        if (ess.sigma1.is_empty()) {
            CHECK(ess.sigma5.is_empty());
            CHECK_FALSE(ess.rho_e.has_value());
        } else {
            CHECK(ess.sigma1.max_radius() == ess.rho_e);
            CHECK(ess.sigma5.max_radius() == ess.rho_e);
        }
    }
}

TEST_CASE("the essential radius is the largest non-isolated block mean") {
    testkit::Rng rng(83);
    int nonempty = 0;
    for (int iter = 0; iter < 60; ++iter) {
        auto d = testkit::random_description(rng);
        System sys{d};
        auto ess = essential_spectra(sys);
        std::optional<double> expect;
        for (const auto& s : block_spectra(sys)) {
            if (s.kind == BlockKind::Cycle && s.isolated) continue;
            if (!expect || s.max_mean > *expect) expect = s.max_mean;
        }
        CHECK(ess.rho_e == expect);
        if (expect) ++nonempty;
    }
    CHECK(nonempty > 20);
}

TEST_CASE("adding or removing an unreferenced cycle is invisible to all levels") {
    testkit::Rng rng(84);
    for (int iter = 0; iter < 40; ++iter) {
        auto d = testkit::random_description(rng);
        System before{d};
        auto base = essential_spectra(before);

        auto grown = d;
        CycleBlock spare{"spare", {}};
        long p = rng.range(1, 3);
        for (long i = 0; i < p; ++i) spare.weights.push_back(rng.weight());
        grown.blocks.push_back(spare);
        System after{grown};
        auto plus = essential_spectra(after);

        CHECK(plus.sigma1 == base.sigma1);
        CHECK(plus.sigma2 == base.sigma2);
        CHECK(plus.sigma3 == base.sigma3);
        CHECK(plus.sigma4 == base.sigma4);
        CHECK(plus.sigma5 == base.sigma5);
        CHECK(plus.rho_e == base.rho_e);
    }
}

TEST_CASE("the component route to the fifth level agrees") {
    testkit::Rng rng(85);
    for (int iter = 0; iter < 60; ++iter) {
        auto d = testkit::random_description(rng);
        System sys{d};
        auto ess = essential_spectra(sys);
        CHECK(sigma5_from_components(ess.sigma1, full_spectrum(sys)) == ess.sigma5);
    }
}

TEST_CASE("level membership mirrors the point classification") {
    testkit::Rng rng(86);
    for (int iter = 0; iter < 30; ++iter) {
        auto d = testkit::random_description(rng);
        System sys{d};
        auto ess = essential_spectra(sys);
        for (int k = 0; k < 8; ++k) {
            Lambda lam = LogPolar{rng.dyadic_logmod() * 1.5, rng.dyadic_phase()};
            auto rep = classify(sys, lam);
            bool in3 = ess.sigma3.member(lam);
            bool in4 = ess.sigma4.member(lam);
            bool fredholm = rep.status == FredholmReport::Status::Resolvent ||
                            rep.status == FredholmReport::Status::Fredholm;
            CHECK(in3 == !fredholm);
            CHECK(ess.sigma1.member(lam) == in3);
            CHECK(ess.sigma2.member(lam) == in3);
            bool zero_index = rep.status == FredholmReport::Status::Resolvent ||
                              (rep.status == FredholmReport::Status::Fredholm &&
                               rep.index == 0);
            CHECK(in4 == !zero_index);
        }
    }
}
