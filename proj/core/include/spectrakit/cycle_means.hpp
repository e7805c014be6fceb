#pragma once

// Per-block radial spectrum summaries. An aperiodic block contributes the
// closed annulus between its extreme cycle means; a cycle block contributes
// a circle when trajectory tails land on it and its p discrete eigenvalues
// (p-th roots of the weight product) when isolated; a clopen periodic block
// contributes the p-th roots of its product specs.

#include <vector>

#include "spectrakit/graph.hpp"
#include "spectrakit/spectral_set.hpp"
#include "spectrakit/system.hpp"

namespace spectrakit {

enum class BlockKind { Aperiodic, Cycle, ClopenPeriodic };

struct BlockSpectrumSummary {
    int block_index = -1;
    BlockKind kind = BlockKind::Aperiodic;
    bool isolated = false;  // cycle blocks only
    double min_mean = 0.0;  // smallest log radius of `radial`
    double max_mean = 0.0;  // largest log radius of `radial`
    SpectralSet radial;
    std::vector<LogPolar> eigenpoints;  // isolated cycles: roots of z^p = product
    LogPolar product{0.0, 0.0};         // cycle blocks: weight product around the cycle
};

double max_cycle_mean(const AperiodicBlock& b);
double min_cycle_mean(const AperiodicBlock& b);

// Roots of z^p = product as log-polar points.
std::vector<LogPolar> cycle_eigenpoints(LogPolar product, int period);

BlockSpectrumSummary block_radial_spectrum(const System& sys, size_t block_index);
std::vector<BlockSpectrumSummary> block_spectra(const System& sys);

// Edge list of an aperiodic block with the weight convention used
// throughout: the weight of (u, v) is the log-modulus at u.
std::vector<Edge> block_edges(const AperiodicBlock& b);

}  // namespace spectrakit
