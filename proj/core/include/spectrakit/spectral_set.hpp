#pragma once

// Closed subsets of the complex plane built from full annuli (described by a
// closed log-modulus interval; lo == hi is a circle), finitely many discrete
// points, and an optional origin marker. Normal form keeps intervals sorted,
// disjoint, touching runs merged, and discrete points outside every interval,
// so structural equality is set equality and all queries are exact on the
// stored doubles.

#include <optional>
#include <vector>

#include "spectrakit/numeric.hpp"

namespace spectrakit {

struct RadialInterval {
    double lo = 0.0;
    double hi = 0.0;  // invariant: lo <= hi
};

class SpectralSet {
public:
    SpectralSet() = default;

    static SpectralSet empty() { return SpectralSet{}; }
    static SpectralSet annulus(double lo, double hi);
    static SpectralSet circle(double r) { return annulus(r, r); }
    static SpectralSet point(LogPolar p);

    void add_interval(double lo, double hi);
    void add_point(LogPolar p);
    void set_includes_zero(bool z) { includes_zero_ = z; }

    // Restores normal form; add_* call this, so sets are always normalized.
    void normalize();

    bool is_empty() const { return radial_.empty() && points_.empty() && !includes_zero_; }
    bool member(const Lambda& lambda) const;
    bool radius_covered(double logmod) const;  // true iff some interval contains it

    // Largest / smallest log-radius over intervals and points (zero ignored).
    std::optional<double> max_radius() const;
    std::optional<double> min_radius() const;

    const std::vector<RadialInterval>& radial() const { return radial_; }
    const std::vector<LogPolar>& points() const { return points_; }
    bool includes_zero() const { return includes_zero_; }

    friend SpectralSet set_union(const SpectralSet& a, const SpectralSet& b);
    friend SpectralSet set_intersection(const SpectralSet& a, const SpectralSet& b);
    friend bool set_subset(const SpectralSet& a, const SpectralSet& b);
    friend bool operator==(const SpectralSet& a, const SpectralSet& b);

private:
    std::vector<RadialInterval> radial_;
    std::vector<LogPolar> points_;
    bool includes_zero_ = false;
};

}  // namespace spectrakit
