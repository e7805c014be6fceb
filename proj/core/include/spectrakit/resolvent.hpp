#pragma once

// One-sided invertibility of lambda*I - T decided by partitioning blocks at
// the query radius t = ln|lambda|: label E when a block's radial spectrum
// lies strictly below t, F strictly above, P when a clopen invariant set
// escapes because lambda misses its finite spectrum. Right invertibility
// needs every straddling trajectory to run E -> F (backward tail low,
// forward tail high); left invertibility needs the opposite; any obstructed
// block kills both sides.

#include <optional>
#include <string>
#include <vector>

#include "spectrakit/cycle_means.hpp"
#include "spectrakit/spectral_set.hpp"
#include "spectrakit/system.hpp"

namespace spectrakit {

enum class BlockLabel { E, F, P, Obstructed };

enum class TrajectoryOrientation {
    InsideE,   // both tails in E blocks
    InsideF,   // both tails in F blocks
    EtoF,      // backward tail in E, forward in F (kernel-oriented straddle)
    FtoE,      // backward tail in F, forward in E (deficiency-oriented straddle)
};

struct PartitionAssignment {
    std::vector<BlockLabel> blocks;                     // parallel to system blocks
    std::vector<TrajectoryOrientation> trajectories;   // parallel to trajectories
};

enum class OneSidedStatus { Both, RightOnly, LeftOnly, Neither };

struct OneSidedResult {
    OneSidedStatus status = OneSidedStatus::Both;
    // Present whenever every block could be labeled, also for a Neither
    // caused by straddles in both orientations.
    std::optional<PartitionAssignment> partition;
    std::string obstruction;  // human-readable reason when Neither
};

// Requires a zero-free system; throws UnsupportedError(ZeroWeightUnsupported).
OneSidedResult one_sided(const System& sys, LogPolar lambda);

// sigma(T): all block radial spectra, the per-trajectory radial hulls
// between the two tail blocks' spectra, and 0 iff a zero weight exists.
SpectralSet full_spectrum(const System& sys);

const char* to_string(OneSidedStatus s);
const char* to_string(BlockLabel l);
const char* to_string(TrajectoryOrientation o);

}  // namespace spectrakit
