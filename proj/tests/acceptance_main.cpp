// Acceptance gate: one line per shipped guarantee, PASS or FAIL with a
// short reason, nonzero exit when anything fails. Every check is
// self-contained and seeded, so reruns are bit-identical.

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectrakit/classifier.hpp"
#include "spectrakit/cycle_means.hpp"
#include "spectrakit/essential.hpp"
#include "spectrakit/oracle.hpp"
#include "spectrakit/resolvent.hpp"
#include "support/fixtures.hpp"
#include "support/random_systems.hpp"

using namespace spectrakit;
using testkit::kLn2;

namespace {

std::string check_nesting() {
    testkit::Rng rng(1001);
    for (int iter = 0; iter < 200; ++iter) {
        System sys{testkit::random_description(rng)};
        auto ess = essential_spectra(sys);
        if (!set_subset(ess.sigma1, ess.sigma2)) return "sigma1 not inside sigma2";
        if (!set_subset(ess.sigma2, ess.sigma3)) return "sigma2 not inside sigma3";
        if (!set_subset(ess.sigma3, ess.sigma4)) return "sigma3 not inside sigma4";
        if (!set_subset(ess.sigma4, ess.sigma5)) return "sigma4 not inside sigma5";
        if (!set_subset(ess.sigma5, full_spectrum(sys))) {
            return "sigma5 leaves the spectrum";
        }
    }
    return "";
}

std::string check_equal_radii() {
    testkit::Rng rng(1002);
    for (int iter = 0; iter < 200; ++iter) {
        System sys{testkit::random_description(rng)};
        auto ess = essential_spectra(sys);
        std::optional<double> expect;
        for (const auto& s : block_spectra(sys)) {
            if (s.kind == BlockKind::Cycle && s.isolated) continue;
            if (!expect || s.max_mean > *expect) expect = s.max_mean;
        }
        if (ess.sigma1.is_empty()) {
            if (!ess.sigma5.is_empty() || ess.rho_e.has_value() || expect.has_value()) {
                return "empty first level but nonempty radius data";
            }
            continue;
        }
        if (ess.sigma1.max_radius() != ess.rho_e) return "sigma1 misses rho_e";
        if (ess.sigma5.max_radius() != ess.rho_e) return "sigma5 misses rho_e";
        if (ess.rho_e != expect) return "rho_e differs from the block mean maximum";
    }
    return "";
}

std::string check_karp_vs_enumeration() {
    testkit::Rng rng(1003);
    for (int iter = 0; iter < 500; ++iter) {
        auto [n, edges] = testkit::random_strong_graph(rng, 8);
        auto bounds = enumerate_cycle_means(n, edges);
        if (compare(max_cycle_mean_karp(n, edges), bounds.max_mean) != 0) {
            return "max mean mismatch at iteration " + std::to_string(iter);
        }
        if (compare(min_cycle_mean_karp(n, edges), bounds.min_mean) != 0) {
            return "min mean mismatch at iteration " + std::to_string(iter);
        }
    }
    return "";
}

std::string check_shift2_benchmark() {
    System sys{testkit::shift2_description()};

    if (full_spectrum(sys) != SpectralSet::annulus(-kLn2, kLn2)) {
        return "spectrum is not the expected annulus";
    }
    auto rep = classify(sys, LogPolar{0.0, 0.0});
    if (rep.status != FredholmReport::Status::Fredholm || rep.nul != 1 ||
        rep.def != 0 || rep.index != 1) {
        return "classification at one is off";
    }

    auto ess = essential_spectra(sys);
    SpectralSet circles;
    circles.add_interval(-kLn2, -kLn2);
    circles.add_interval(kLn2, kLn2);
    SpectralSet annulus = SpectralSet::annulus(-kLn2, kLn2);
    if (ess.sigma1 != circles || ess.sigma2 != circles || ess.sigma3 != circles) {
        return "first three levels are not the two circles";
    }
    if (ess.sigma4 != annulus || ess.sigma5 != annulus) {
        return "last two levels are not the full annulus";
    }

    auto k = kernel_candidate(sys, 0, {0.0, 0.0}, 200);
    if (k.max_residual > 1e-12) return "kernel residual above tolerance";
    if (k.backward_tail > 1e-6 || k.forward_tail > 1e-6) return "kernel tails too fat";
    if (!k.verdict) return "kernel candidate rejected";

    System rev{sys.reversed()};
    auto rrep = classify(rev, LogPolar{0.0, 0.0});
    if (rrep.status != FredholmReport::Status::Fredholm || rrep.nul != 0 ||
        rrep.def != 1 || rrep.index != -1) {
        return "reversed classification is not the mirror";
    }
    if (!adjoint_candidate(rev, 0, {0.0, 0.0}, 200).verdict) {
        return "adjoint candidate rejected on the reversed system";
    }
    return "";
}

LogPolar sample_lambda(testkit::Rng& rng, const SpectralSet& spec) {
    double t;
    long roll = rng.range(0, 3);
    std::vector<double> critical;
    for (const auto& iv : spec.radial()) {
        critical.push_back(iv.lo);
        critical.push_back(iv.hi);
        critical.push_back((iv.lo + iv.hi) / 2.0);
    }
    for (const auto& p : spec.points()) critical.push_back(p.logmod);
    if (roll == 0 || critical.empty()) {
        t = rng.dyadic_logmod() * 1.5;
    } else {
        t = critical[rng.range(0, static_cast<long>(critical.size()) - 1)];
        if (roll == 2) t += 0.0625;
    }
    return {t, rng.dyadic_phase()};
}

std::string check_classifier_consistency() {
    testkit::Rng rng(1005);
    int pairs = 0;
    while (pairs < 500) {
        System sys{testkit::random_description(rng)};
        auto spec = full_spectrum(sys);
        auto ess = essential_spectra(sys);
        for (int k = 0; k < 5 && pairs < 500; ++k, ++pairs) {
            LogPolar lam = sample_lambda(rng, spec);
            auto rep = classify(sys, lam);
            bool resolvent = rep.status == FredholmReport::Status::Resolvent;
            if (resolvent == spec.member(lam)) {
                return "resolvent flag disagrees with spectrum membership";
            }
            bool fredholm = resolvent || rep.status == FredholmReport::Status::Fredholm;
            if (ess.sigma3.member(lam) == fredholm) {
                return "third level disagrees with the fredholm verdict";
            }
            bool zero_index = resolvent ||
                              (rep.status == FredholmReport::Status::Fredholm &&
                               rep.index == 0);
            if (ess.sigma4.member(lam) == zero_index) {
                return "fourth level disagrees with the index";
            }
        }
    }
    return "";
}

bool reports_equal(const FredholmReport& a, const FredholmReport& b) {
    return a.status == b.status && a.nul == b.nul && a.def == b.def &&
           a.index == b.index && a.finite_side == b.finite_side &&
           a.finite_count == b.finite_count &&
           a.kernel_trajectories == b.kernel_trajectories &&
           a.deficiency_trajectories == b.deficiency_trajectories &&
           a.matched_cycles == b.matched_cycles &&
           a.sigma_membership == b.sigma_membership;
}

std::string check_rotation_invariance() {
    testkit::Rng rng(1006);
    for (int iter = 0; iter < 50; ++iter) {
        System sys{testkit::random_description(rng)};
        std::vector<LogPolar> exceptional;
        for (const auto& s : block_spectra(sys)) {
            if (s.kind == BlockKind::Cycle && s.isolated) {
                exceptional.insert(exceptional.end(), s.eigenpoints.begin(),
                                   s.eigenpoints.end());
            }
            if (s.kind == BlockKind::ClopenPeriodic) {
                exceptional.insert(exceptional.end(), s.radial.points().begin(),
                                   s.radial.points().end());
            }
        }
        auto is_exceptional = [&](LogPolar lam) {
            for (const auto& p : exceptional) {
                if (p.logmod == lam.logmod && p.phase == lam.phase) return true;
            }
            return false;
        };
        for (int j = 0; j < 2; ++j) {
            LogPolar base = sample_lambda(rng, full_spectrum(sys));
            if (is_exceptional(base)) continue;
            auto want = classify(sys, base);
            for (int r = 0; r < 16; ++r) {
                LogPolar rot{base.logmod,
                             frac_turns(base.phase + static_cast<double>(r) / 16.0)};
                if (is_exceptional(rot)) continue;
                if (!reports_equal(want, classify(sys, rot))) {
                    return "rotation changed the verdict away from discrete points";
                }
            }
        }
    }
    return "";
}

std::string check_finite_systems() {
    testkit::Rng rng(1007);
    for (int iter = 0; iter < 100; ++iter) {
        System sys{testkit::random_finite_description(rng)};
        auto ess = essential_spectra(sys);
        if (!ess.sigma1.is_empty() || !ess.sigma2.is_empty() ||
            !ess.sigma3.is_empty() || !ess.sigma4.is_empty()) {
            return "finite system grew an essential level";
        }
        auto spec = full_spectrum(sys);
        if (!spec.radial().empty() || spec.includes_zero()) {
            return "finite spectrum is not purely discrete";
        }
        auto roots = finite_matrix_spectrum(sys);
        auto near = [](LogPolar a, LogPolar b) {
            return std::abs(a.logmod - b.logmod) <= 1e-9 &&
                   phase_distance(a.phase, b.phase) <= 1e-9;
        };
        for (const auto& p : spec.points()) {
            bool hit = false;
            for (const auto& r : roots) hit = hit || near(p, r);
            if (!hit) return "spectrum point misses every matrix root";
            auto rep = classify(sys, p);
            if (rep.status != FredholmReport::Status::Fredholm || rep.index != 0 ||
                rep.nul < 1 || rep.nul != rep.def) {
                return "eigenvalue did not classify as index-zero fredholm";
            }
        }
        for (const auto& r : roots) {
            bool hit = false;
            for (const auto& p : spec.points()) hit = hit || near(p, r);
            if (!hit) return "matrix root misses the spectrum";
        }
    }
    return "";
}

std::string check_duality() {
    testkit::Rng rng(1008);
    for (int iter = 0; iter < 100; ++iter) {
        System sys{testkit::random_description(rng)};
        System rev{sys.reversed()};
        for (int k = 0; k < 20; ++k) {
            LogPolar lam = sample_lambda(rng, full_spectrum(sys));
            auto a = classify(sys, lam);
            auto b = classify(rev, lam);
            if (a.status != b.status) return "status changed under reversal";
            if (a.nul != b.def || a.def != b.nul || a.index != -b.index) {
                return "counts did not swap under reversal";
            }
            if (a.kernel_trajectories != b.deficiency_trajectories ||
                a.deficiency_trajectories != b.kernel_trajectories ||
                a.matched_cycles != b.matched_cycles) {
                return "witness lists did not swap under reversal";
            }
        }
    }
    return "";
}

std::string check_sigma5_routes() {
    testkit::Rng rng(1009);
    for (int iter = 0; iter < 200; ++iter) {
        System sys{testkit::random_description(rng)};
        auto ess = essential_spectra(sys);
        if (sigma5_from_components(ess.sigma1, full_spectrum(sys)) != ess.sigma5) {
            return "component recomputation disagrees at iteration " +
                   std::to_string(iter);
        }
    }
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {"essential levels nest", check_nesting},
        {"essential radii coincide", check_equal_radii},
        {"cycle-mean DP matches enumeration", check_karp_vs_enumeration},
        {"two-weight shift benchmark", check_shift2_benchmark},
        {"classifier matches the spectra", check_classifier_consistency},
        {"verdicts are rotation invariant", check_rotation_invariance},
        {"finite systems stay discrete", check_finite_systems},
        {"reversal swaps the two sides", check_duality},
        {"fifth level agrees by components", check_sigma5_routes},
    };

    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string err;
        try {
            err = criteria[i].run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        all_ok = all_ok && err.empty();
        std::printf("[%zu/%zu] %-36s %s%s%s\n", i + 1, criteria.size(),
                    criteria[i].name, err.empty() ? "PASS" : "FAIL",
                    err.empty() ? "" : " - ", err.c_str());
    }
    return all_ok ? 0 : 1;
}
