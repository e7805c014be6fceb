#pragma once

// The five nested essential spectra. Non-isolated blocks generate witnesses
// of both orientations at every radius of their spectra, so the first three
// sets coincide here: aperiodic annuli, non-isolated cycle circles, and the
// clopen periodic term. The fourth adds every radius where upward and
// downward trajectory straddles are out of balance (a nonzero index), the
// fifth the full radial hulls trajectories force into sigma(T).

#include <optional>

#include "spectrakit/spectral_set.hpp"
#include "spectrakit/system.hpp"

namespace spectrakit {

struct EssentialSpectra {
    SpectralSet sigma1, sigma2, sigma3, sigma4, sigma5;
    SpectralSet sigma_term;          // clopen periodic contributions
    std::optional<double> rho_e;     // log essential spectral radius; empty set -> nullopt
};

// Union of the clopen periodic blocks' spectra (p-th roots of their
// products): discrete points and scaled modulus bands.
SpectralSet sigma_term(const System& sys);

// Requires a zero-free system; throws UnsupportedError(ZeroWeightUnsupported).
EssentialSpectra essential_spectra(const System& sys);

// Independent route to sigma_5 straight from the definition: sigma(T) minus
// every component of the complement of sigma_1 that meets the resolvent.
// Radial gap components either lie wholly inside sigma(T) (then they join
// sigma_5) or reach the resolvent (then their part of sigma(T) is cut).
SpectralSet sigma5_from_components(const SpectralSet& sigma1, const SpectralSet& spectrum);

}  // namespace spectrakit
