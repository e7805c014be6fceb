#pragma once

// Point classification of lambda*I - T. For lambda != 0 on a zero-free
// system: radii inside a non-isolated block spectrum or on a clopen family
// spectrum admit no semi-Fredholm behaviour; otherwise kernel dimensions
// come from trajectories whose tail means strictly straddle the radius
// upward, cokernel dimensions from downward straddles, and each isolated
// cycle whose finite spectrum contains lambda adds one to both sides. The
// remainder system (counted orbits and matched cycles removed) must be
// invertible at lambda for the Fredholm verdict.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spectrakit/numeric.hpp"
#include "spectrakit/system.hpp"

namespace spectrakit {

enum class CrossingDirection {
    Kernel,      // forward partial sums >= n*t, backward <= n*t at the witness
    Deficiency,  // the reversed pair of inequalities
};

// Whether some orbit position of the trajectory satisfies every partial-sum
// inequality for the given direction at radius t. The cumulative weight
// excess tends to +inf on both tails exactly when the tail means sit on the
// correct sides (ties allowed: the excess is then periodic and bounded), so
// the infinite family of checks reduces to two tail-mean comparisons; a
// witness position is then any global extremum of the cumulative excess,
// which lives in the core extended by one anchor period on each side.
bool crossing_exists(const System& sys, size_t traj, double t, CrossingDirection dir);

// Witness orbit index used by the residual oracles: the first global
// minimizer (Kernel) or maximizer (Deficiency) of the cumulative excess over
// the core extended by one anchor period on each side.
long crossing_base_index(const System& sys, size_t traj, double t, CrossingDirection dir);

struct FredholmReport {
    enum class Status { Resolvent, Fredholm, SemiFredholmOnly, NotSemiFredholm };
    enum class FiniteSide { Kernel, Cokernel };

    Lambda lambda;
    Status status = Status::Resolvent;

    // Fredholm / Resolvent: index = nul - def.
    long nul = 0;
    long def = 0;
    long index = 0;

    // SemiFredholmOnly: the side that stayed finite-dimensional.
    FiniteSide finite_side = FiniteSide::Kernel;
    long finite_count = 0;

    std::vector<std::string> kernel_trajectories;
    std::vector<std::string> deficiency_trajectories;
    std::vector<std::string> matched_cycles;
    std::string witness;  // obstruction description for NotSemiFredholm

    // lambda's membership in sigma_1..sigma_5; absent when the system has
    // zero weights (essential spectra are not computed then).
    std::optional<std::array<bool, 5>> sigma_membership;
};

// lambda = nullopt encodes 0: always Fredholm with index 0 in this model,
// nul = def = number of zero weights. For lambda != 0 the system must be
// zero-free (UnsupportedError(ZeroWeightUnsupported) otherwise).
FredholmReport classify(const System& sys, const Lambda& lambda);

const char* to_string(FredholmReport::Status s);

}  // namespace spectrakit
