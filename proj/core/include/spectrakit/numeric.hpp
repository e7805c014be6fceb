#pragma once

// Log-polar scalars. A nonzero complex number is stored as (logmod, phase)
// with logmod = ln|z| and phase in turns, normalized to [0, 1). All radius
// work elsewhere happens on logmod alone, so overflow-prone |z| never
// materializes. Zero is not representable here; carriers that need it wrap
// this in an optional.

#include <cmath>
#include <complex>
#include <optional>
#include <string>

namespace spectrakit {

// Fractional part mapped into [0, 1). Stable for mildly negative inputs.
inline double frac_turns(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;  // guards x = -1e-17 rounding to 1.0
    return f;
}

// Shortest-circle distance between two phases, in turns (range [0, 0.5]).
inline double phase_distance(double a, double b) {
    double d = frac_turns(a - b);
    return d > 0.5 ? 1.0 - d : d;
}

struct LogPolar {
    double logmod = 0.0;
    double phase = 0.0;  // turns, in [0, 1)

    static LogPolar from_cartesian(double re, double im) {
        return LogPolar{std::log(std::hypot(re, im)),
                        frac_turns(std::atan2(im, re) / (2.0 * M_PI))};
    }

    std::complex<double> to_cartesian() const {
        double m = std::exp(logmod);
        return {m * std::cos(2.0 * M_PI * phase), m * std::sin(2.0 * M_PI * phase)};
    }
};

inline LogPolar log_mul(LogPolar a, LogPolar b) {
    return {a.logmod + b.logmod, frac_turns(a.phase + b.phase)};
}

inline LogPolar log_pow(LogPolar a, long n) {
    return {a.logmod * static_cast<double>(n),
            frac_turns(a.phase * static_cast<double>(n))};
}

// One weight value w(k) at a non-zero point of the system.
struct LogWeight {
    double logmod = 0.0;
    double phase = 0.0;
};

// Weight entry on a trajectory core; nullopt marks w(k) = 0.
using CoreEntry = std::optional<LogWeight>;

// Query scalar lambda; nullopt encodes lambda = 0.
using Lambda = std::optional<LogPolar>;

// A cycle mean kept unreduced as (sum of logmods, length) so that order
// comparisons can cross-multiply instead of divide. With dyadic rational
// logmods and short cycles both products are exact in double.
struct MeanRatio {
    double sum = 0.0;
    int len = 1;

    double value() const { return sum / static_cast<double>(len); }
};

// Sign of a - b without division.
inline int compare(MeanRatio a, MeanRatio b) {
    double lhs = a.sum * static_cast<double>(b.len);
    double rhs = b.sum * static_cast<double>(a.len);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace spectrakit
