#pragma once

// Independent evidence for the analytic modules. The residual oracles build
// candidate eigenvectors (kernel side) and point-mass eigenfunctionals
// (adjoint side) along a trajectory by running the defining recurrence in
// the log domain with compensated sums, then judge decay at the window
// edges. The enumeration oracle cross-checks the cycle-mean DP exhaustively.
// All arithmetic stays in (logmod, phase) form; magnitudes like e^300 never
// materialize except in the reported tail figures.

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "spectrakit/graph.hpp"
#include "spectrakit/numeric.hpp"
#include "spectrakit/system.hpp"

namespace spectrakit {

// Cooperative cancellation for long enumerations: the caller owns the flag,
// the oracle polls it and gives up with UnsupportedError("Cancelled").
struct CancelToken {
    const std::atomic<bool>* flag = nullptr;
    bool cancelled() const { return flag && flag->load(std::memory_order_relaxed); }
};

struct ResidualReport {
    std::string trajectory_id;
    LogPolar lambda{0.0, 0.0};
    int window = 200;
    double max_residual = 0.0;   // eigen-equation residual, scale-normalized
    double backward_tail = 0.0;  // decay evidence at the -window edge
    double forward_tail = 0.0;   // decay evidence at the +window edge
    double residual_tolerance = 1e-12;
    double tail_threshold = 1e-6;
    bool verdict = false;  // residual and both tails within bounds
};

// Candidate kernel function of lambda*I - T along one trajectory: value 1 at
// the crossing witness, extended by u(next) = lambda * u(here) / w(here).
// Tails are |u| at the window edges; they decay iff the trajectory's tail
// means strictly straddle the radius upward.
ResidualReport kernel_candidate(const System& sys, size_t traj, LogPolar lambda,
                                int window = 200);

// Candidate point-mass eigenfunctional of the adjoint: coefficients follow
// c(next) = c(here) * w(here) / lambda from the witness. Tails report the
// l1 mass of the final anchor period at each window edge; they decay iff
// the tail means strictly straddle the radius downward.
ResidualReport adjoint_candidate(const System& sys, size_t traj, LogPolar lambda,
                                 int window = 200);

struct CycleMeanBounds {
    MeanRatio min_mean{0.0, 1};
    MeanRatio max_mean{0.0, 1};
    long cycle_count = 0;
};

// Exhaustive simple-cycle enumeration; exact oracle for the cycle-mean DP.
// Refuses graphs with more than 12 vertices (UnsupportedError("TooLarge")).
CycleMeanBounds enumerate_cycle_means(int n, const std::vector<Edge>& edges,
                                      CancelToken cancel = {});
CycleMeanBounds enumerate_block_cycle_means(const AperiodicBlock& b,
                                            CancelToken cancel = {});

// Eigenvalues of T on a purely finite system (all blocks isolated cycles,
// no trajectories): per cycle the p-th roots of the weight product, computed
// through cartesian complex arithmetic as an independent route. Throws
// UnsupportedError("NotFinite") for infinite systems and "TooLarge" past
// total dimension 64. Result sorted by (logmod, phase).
std::vector<LogPolar> finite_matrix_spectrum(const System& sys);

struct VerificationRow {
    std::string check;
    std::string status;  // PASS / FAIL / SKIP
    std::string detail;
};

// Self-check battery over one system; deterministic for a fixed seed.
std::vector<VerificationRow> run_verification(const System& sys, std::uint64_t seed);

}  // namespace spectrakit
