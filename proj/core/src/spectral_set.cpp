#include "spectrakit/spectral_set.hpp"

#include <algorithm>
#include <cassert>

namespace spectrakit {

SpectralSet SpectralSet::annulus(double lo, double hi) {
    SpectralSet s;
    s.add_interval(lo, hi);
    return s;
}

SpectralSet SpectralSet::point(LogPolar p) {
    SpectralSet s;
    s.add_point(p);
    return s;
}

void SpectralSet::add_interval(double lo, double hi) {
    assert(lo <= hi);
    radial_.push_back({lo, hi});
    normalize();
}

void SpectralSet::add_point(LogPolar p) {
    points_.push_back({p.logmod, frac_turns(p.phase)});
    normalize();
}

void SpectralSet::normalize() {
    std::sort(radial_.begin(), radial_.end(),
              [](const RadialInterval& a, const RadialInterval& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    std::vector<RadialInterval> merged;
    for (const auto& iv : radial_) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    radial_ = std::move(merged);

    std::sort(points_.begin(), points_.end(), [](const LogPolar& a, const LogPolar& b) {
        return a.logmod < b.logmod || (a.logmod == b.logmod && a.phase < b.phase);
    });
    points_.erase(std::unique(points_.begin(), points_.end(),
                              [](const LogPolar& a, const LogPolar& b) {
                                  return a.logmod == b.logmod && a.phase == b.phase;
                              }),
                  points_.end());
    std::erase_if(points_, [this](const LogPolar& p) { return radius_covered(p.logmod); });
}

bool SpectralSet::radius_covered(double logmod) const {
    auto it = std::upper_bound(radial_.begin(), radial_.end(), logmod,
                               [](double v, const RadialInterval& iv) { return v < iv.lo; });
    if (it == radial_.begin()) return false;
    --it;
    return logmod <= it->hi;
}

bool SpectralSet::member(const Lambda& lambda) const {
    if (!lambda.has_value()) return includes_zero_;
    if (radius_covered(lambda->logmod)) return true;
    double ph = frac_turns(lambda->phase);
    return std::any_of(points_.begin(), points_.end(), [&](const LogPolar& p) {
        return p.logmod == lambda->logmod && p.phase == ph;
    });
}

std::optional<double> SpectralSet::max_radius() const {
    std::optional<double> r;
    if (!radial_.empty()) r = radial_.back().hi;
    for (const auto& p : points_) {
        if (!r || p.logmod > *r) r = p.logmod;
    }
    return r;
}

std::optional<double> SpectralSet::min_radius() const {
    std::optional<double> r;
    if (!radial_.empty()) r = radial_.front().lo;
    for (const auto& p : points_) {
        if (!r || p.logmod < *r) r = p.logmod;
    }
    return r;
}

SpectralSet set_union(const SpectralSet& a, const SpectralSet& b) {
    SpectralSet out = a;
    out.radial_.insert(out.radial_.end(), b.radial_.begin(), b.radial_.end());
    out.points_.insert(out.points_.end(), b.points_.begin(), b.points_.end());
    out.includes_zero_ = a.includes_zero_ || b.includes_zero_;
    out.normalize();
    return out;
}

SpectralSet set_intersection(const SpectralSet& a, const SpectralSet& b) {
    SpectralSet out;
    for (const auto& x : a.radial_) {
        for (const auto& y : b.radial_) {
            double lo = std::max(x.lo, y.lo);
            double hi = std::min(x.hi, y.hi);
            if (lo <= hi) out.radial_.push_back({lo, hi});
        }
    }
    for (const auto& p : a.points_) {
        if (b.member(LogPolar{p.logmod, p.phase})) out.points_.push_back(p);
    }
    for (const auto& p : b.points_) {
        if (a.member(LogPolar{p.logmod, p.phase})) out.points_.push_back(p);
    }
    out.includes_zero_ = a.includes_zero_ && b.includes_zero_;
    out.normalize();
    return out;
}

bool set_subset(const SpectralSet& a, const SpectralSet& b) {
    if (a.includes_zero_ && !b.includes_zero_) return false;
    // Normal form keeps gaps strictly positive, so a connected interval of a
    // fits in the union of b's intervals only by fitting in a single one.
    for (const auto& iv : a.radial_) {
        auto it = std::upper_bound(b.radial_.begin(), b.radial_.end(), iv.lo,
                                   [](double v, const RadialInterval& w) { return v < w.lo; });
        if (it == b.radial_.begin()) return false;
        --it;
        if (iv.lo > it->hi || iv.hi > it->hi) return false;
    }
    for (const auto& p : a.points_) {
        if (!b.member(LogPolar{p.logmod, p.phase})) return false;
    }
    return true;
}

bool operator==(const SpectralSet& a, const SpectralSet& b) {
    if (a.includes_zero_ != b.includes_zero_) return false;
    if (a.radial_.size() != b.radial_.size() || a.points_.size() != b.points_.size())
        return false;
    for (size_t i = 0; i < a.radial_.size(); ++i) {
        if (a.radial_[i].lo != b.radial_[i].lo || a.radial_[i].hi != b.radial_[i].hi)
            return false;
    }
    for (size_t i = 0; i < a.points_.size(); ++i) {
        if (a.points_[i].logmod != b.points_[i].logmod || a.points_[i].phase != b.points_[i].phase)
            return false;
    }
    return true;
}

}  // namespace spectrakit
