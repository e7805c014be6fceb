#include "spectrakit/essential.hpp"

#include <algorithm>
#include <vector>

#include "spectrakit/cycle_means.hpp"
#include "spectrakit/errors.hpp"

namespace spectrakit {

SpectralSet sigma_term(const System& sys) {
    SpectralSet out;
    for (size_t i = 0; i < sys.block_count(); ++i) {
        if (std::holds_alternative<ClopenPeriodicBlock>(sys.block(i))) {
            out = set_union(out, block_radial_spectrum(sys, i).radial);
        }
    }
    return out;
}

EssentialSpectra essential_spectra(const System& sys) {
    if (!sys.zero_free()) {
        throw UnsupportedError("ZeroWeightUnsupported",
                               "essential spectra need zero-free weights");
    }

    EssentialSpectra out;
    auto spectra = block_spectra(sys);

    SpectralSet base;  // non-isolated block spectra + clopen term
    for (const auto& s : spectra) {
        if (s.kind == BlockKind::Cycle && s.isolated) continue;
        base = set_union(base, s.radial);
        if (s.kind == BlockKind::ClopenPeriodic) {
            out.sigma_term = set_union(out.sigma_term, s.radial);
        }
    }
    out.sigma1 = out.sigma2 = out.sigma3 = base;

    // Index imbalance: per trajectory an open radius interval between its
    // tail means, oriented by which tail is higher. Consecutive breakpoints
    // with a nonzero signed cover join sigma_4; endpoints are tail-cycle
    // means and so already lie in sigma_3, keeping the set closed.
    struct Span {
        double lo, hi;
        int sign;
    };
    std::vector<Span> spans;
    std::vector<double> cuts;
    for (size_t ti = 0; ti < sys.trajectory_count(); ++ti) {
        double bw = sys.backward_anchor(ti).mean().value();
        double fw = sys.forward_anchor(ti).mean().value();
        if (bw == fw) continue;
        spans.push_back({std::min(bw, fw), std::max(bw, fw), bw < fw ? 1 : -1});
        cuts.push_back(bw);
        cuts.push_back(fw);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    out.sigma4 = base;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        int net = 0;
        for (const auto& s : spans) {
            if (s.lo <= cuts[i] && cuts[i + 1] <= s.hi) net += s.sign;
        }
        if (net != 0) out.sigma4.add_interval(cuts[i], cuts[i + 1]);
    }

    out.sigma5 = base;
    for (size_t ti = 0; ti < sys.trajectory_count(); ++ti) {
        const auto& bw = spectra[sys.backward_anchor(ti).block_index];
        const auto& fw = spectra[sys.forward_anchor(ti).block_index];
        out.sigma5.add_interval(std::min(bw.min_mean, fw.min_mean),
                                std::max(bw.max_mean, fw.max_mean));
    }

    out.rho_e = out.sigma5.max_radius();
    return out;
}

SpectralSet sigma5_from_components(const SpectralSet& sigma1, const SpectralSet& spectrum) {
    SpectralSet out = sigma1;
    const auto& ivs = sigma1.radial();
    for (size_t i = 0; i + 1 < ivs.size(); ++i) {
        double lo = ivs[i].hi;
        double hi = ivs[i + 1].lo;
        // The open gap annulus is one component of the complement (discrete
        // points never disconnect it). It avoids the resolvent iff sigma(T)
        // covers the whole radius gap.
        bool covered = std::any_of(spectrum.radial().begin(), spectrum.radial().end(),
                                   [&](const RadialInterval& iv) {
                                       return iv.lo <= lo && hi <= iv.hi;
                                   });
        if (covered) out.add_interval(lo, hi);
    }
    // The inner disk reaches 0 and the outer region reaches infinity; for a
    // zero-free system both meet the resolvent, so nothing else survives.
    return out;
}

}  // namespace spectrakit
