#pragma once

// Radial diagrams of the spectrum with the five essential overlays. Both
// backends read only the serialized set data (intervals, points, zero flag),
// draw concentric annuli and circles on a log-radius axis, and print every
// number as a shortest round-trip decimal, so output is byte-stable.

#include <string>

#include "spectrakit/essential.hpp"
#include "spectrakit/spectral_set.hpp"

namespace spectrakit {

// One labeled row per critical radius (interval endpoint or discrete-point
// radius of any layer), outermost first. Markers: '#' full circle at that
// radius lies in the layer, 'o' only discrete points there, '.' neither.
std::string render_ascii(const SpectralSet& spectrum, const EssentialSpectra& ess);

// Concentric filled rings per layer (lightest sigma_5 outward-in to darkest
// sigma_1), dashed boundary circles for sigma(T), dots for discrete points,
// legend at the right edge.
std::string render_svg(const SpectralSet& spectrum, const EssentialSpectra& ess);

}  // namespace spectrakit
