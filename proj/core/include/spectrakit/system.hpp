#pragma once

// Finite presentation of a compact dynamical system with weights: weighted
// graph blocks plus bi-infinite isolated-point trajectories whose two tails
// land on anchor cycles inside blocks. Trajectory weight sequences are the
// core entries on [0, |core|), the forward anchor cycle from |core| on, and
// the backward anchor cycle below 0.

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "spectrakit/errors.hpp"
#include "spectrakit/numeric.hpp"

namespace spectrakit {

struct AperiodicBlock {
    std::string id;
    std::vector<std::string> vertices;  // ids, order preserved from input
    std::vector<LogWeight> weights;     // parallel to vertices
    std::vector<std::pair<std::string, std::string>> edges;
};

struct CycleBlock {
    std::string id;
    std::vector<LogWeight> weights;  // period = size, traversal order
};

// Product of the weights around one period of a clopen periodic family:
// either pinned to a single value or sweeping a log-modulus band.
struct PointProduct {
    double logmod = 0.0;
    double phase = 0.0;
};
struct ModulusBand {
    double lo = 0.0;
    double hi = 0.0;
};
using ProductSpec = std::variant<PointProduct, ModulusBand>;

struct ClopenPeriodicBlock {
    std::string id;
    int period = 1;
    std::vector<ProductSpec> products;
};

using Block = std::variant<AperiodicBlock, CycleBlock, ClopenPeriodicBlock>;

const std::string& block_id(const Block& b);

// Trajectory tail target: a simple cycle of `block`, entered with the given
// positional offset. For CycleBlock targets the cycle list stays empty (the
// whole block is the cycle).
struct AnchorRef {
    std::string block;
    std::vector<std::string> cycle;
    long offset = 0;
};

struct Trajectory {
    std::string id;
    AnchorRef backward;
    std::vector<CoreEntry> core;
    AnchorRef forward;
};

struct SystemDescription {
    std::vector<Block> blocks;
    std::vector<Trajectory> trajectories;
};

// Full invariant check; empty result means the description is valid.
std::vector<Violation> validate(const SystemDescription& desc);

// Anchor with its weight cycle resolved into traversal order.
struct ResolvedAnchor {
    int block_index = -1;
    std::vector<LogWeight> weights;
    long offset = 0;

    int period() const { return static_cast<int>(weights.size()); }

    // Summed in sorted order so the value is bit-identical for any
    // traversal order of the same weight multiset (rotation, reversal).
    MeanRatio mean() const {
        std::vector<double> ms;
        ms.reserve(weights.size());
        for (const auto& w : weights) ms.push_back(w.logmod);
        std::sort(ms.begin(), ms.end());
        MeanRatio m{0.0, period()};
        for (double v : ms) m.sum += v;
        return m;
    }
};

// Validated, immutable view of a SystemDescription with derived lookups.
// Construction throws ValidationError when validate() reports anything.
class System {
public:
    explicit System(SystemDescription desc);

    const SystemDescription& description() const { return desc_; }
    size_t block_count() const { return desc_.blocks.size(); }
    size_t trajectory_count() const { return desc_.trajectories.size(); }
    const Block& block(size_t i) const { return desc_.blocks[i]; }
    const Trajectory& trajectory(size_t i) const { return desc_.trajectories[i]; }
    int block_index(const std::string& id) const;

    // A cycle block is isolated iff no trajectory tail lands on it.
    bool cycle_isolated(size_t block_index) const { return !referenced_[block_index]; }

    const ResolvedAnchor& backward_anchor(size_t traj) const { return backward_[traj]; }
    const ResolvedAnchor& forward_anchor(size_t traj) const { return forward_[traj]; }

    // Weight of the trajectory point at orbit index i (core sits on
    // [0, core.size())); nullopt is a zero weight.
    CoreEntry weight_at(size_t traj, long i) const;

    size_t zero_count() const { return zero_count_; }
    bool zero_free() const { return zero_count_ == 0; }

    // The same space run backwards: edges, cores, and anchors reversed,
    // vertex weights in place. Reversing twice restores the description.
    SystemDescription reversed() const;

private:
    SystemDescription desc_;
    std::vector<bool> referenced_;
    std::vector<ResolvedAnchor> backward_, forward_;
    size_t zero_count_ = 0;
};

inline long mod_index(long value, long period) {
    long m = value % period;
    return m < 0 ? m + period : m;
}

}  // namespace spectrakit
