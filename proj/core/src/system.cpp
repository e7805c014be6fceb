#include "spectrakit/system.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "spectrakit/graph.hpp"

namespace spectrakit {

const std::string& block_id(const Block& b) {
    return std::visit([](const auto& blk) -> const std::string& { return blk.id; }, b);
}

namespace {

bool finite(double x) { return std::isfinite(x); }

void check_weight(const std::string& entity, const LogWeight& w,
                  std::vector<Violation>& out) {
    if (!finite(w.logmod)) {
        out.push_back({entity, "logmod-finite", "log-modulus must be finite"});
    }
    if (!finite(w.phase) || w.phase < 0.0 || w.phase >= 1.0) {
        out.push_back({entity, "phase-range", "phase must lie in [0, 1) turns"});
    }
}

void validate_aperiodic(const AperiodicBlock& b, std::vector<Violation>& out) {
    if (b.vertices.empty()) {
        out.push_back({b.id, "no-vertices", "block has no vertices"});
        return;
    }
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < b.vertices.size(); ++i) {
        if (!index.emplace(b.vertices[i], static_cast<int>(i)).second) {
            out.push_back({b.id, "duplicate-vertex-id",
                           "vertex id repeated: " + b.vertices[i]});
        }
    }
    for (const auto& w : b.weights) check_weight(b.id, w, out);

    std::set<std::pair<std::string, std::string>> seen;
    std::vector<Edge> edges;
    bool refs_ok = true;
    for (const auto& [from, to] : b.edges) {
        auto fi = index.find(from);
        auto ti = index.find(to);
        if (fi == index.end() || ti == index.end()) {
            out.push_back({b.id, "unknown-edge-vertex",
                           "edge (" + from + ", " + to + ") uses an unknown vertex"});
            refs_ok = false;
            continue;
        }
        if (!seen.insert({from, to}).second) {
            out.push_back({b.id, "duplicate-edge",
                           "edge (" + from + ", " + to + ") repeated"});
        }
        edges.push_back({fi->second, ti->second, 0.0});
    }
    if (!refs_ok) return;

    int n = static_cast<int>(b.vertices.size());
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& e : edges) {
        ++outdeg[e.from];
        ++indeg[e.to];
    }
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0 || outdeg[v] == 0) {
            out.push_back({b.id, "vertex-degree",
                           "vertex " + b.vertices[v] + " needs in- and out-degree >= 1"});
        }
    }
    if (!strongly_connected(n, edges)) {
        out.push_back({b.id, "not-strongly-connected", "block graph must be one SCC"});
        return;
    }
    bool all_outdeg_one =
        std::all_of(outdeg.begin(), outdeg.end(), [](int d) { return d == 1; });
    if (all_outdeg_one) {
        out.push_back({b.id, "single-simple-cycle",
                       "block is one simple cycle; use a cycle block for that"});
    }
}

void validate_clopen(const ClopenPeriodicBlock& b, std::vector<Violation>& out) {
    if (b.period < 1) {
        out.push_back({b.id, "period-range", "period must be >= 1"});
    }
    if (b.products.empty()) {
        out.push_back({b.id, "no-products", "at least one product spec required"});
    }
    for (const auto& p : b.products) {
        if (const auto* pt = std::get_if<PointProduct>(&p)) {
            check_weight(b.id, LogWeight{pt->logmod, pt->phase}, out);
        } else {
            const auto& band = std::get<ModulusBand>(p);
            if (!finite(band.lo) || !finite(band.hi)) {
                out.push_back({b.id, "logmod-finite", "band endpoints must be finite"});
            } else if (band.lo > band.hi) {
                out.push_back({b.id, "band-order", "band needs lo <= hi"});
            }
        }
    }
}

// Checks that anchor.cycle is a simple cycle of the aperiodic block.
void validate_anchor(const std::string& traj_id, const AnchorRef& anchor,
                     const Block& target, std::vector<Violation>& out) {
    if (std::holds_alternative<ClopenPeriodicBlock>(target)) {
        out.push_back({traj_id, "limit-block-kind",
                       "trajectory tails may target aperiodic or cycle blocks only"});
        return;
    }
    if (std::holds_alternative<CycleBlock>(target)) {
        if (!anchor.cycle.empty()) {
            out.push_back({traj_id, "cycle-anchor-implicit",
                           "cycle-block anchors are implicit; leave the cycle list empty"});
        }
        return;
    }
    const auto& blk = std::get<AperiodicBlock>(target);
    if (anchor.cycle.empty()) {
        out.push_back({traj_id, "anchor-empty",
                       "aperiodic anchors must list a simple cycle"});
        return;
    }
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < blk.vertices.size(); ++i) index[blk.vertices[i]] = static_cast<int>(i);
    std::set<std::pair<std::string, std::string>> edge_set(blk.edges.begin(), blk.edges.end());
    std::unordered_set<std::string> used;
    for (const auto& v : anchor.cycle) {
        if (!index.count(v)) {
            out.push_back({traj_id, "anchor-vertex-unknown",
                           "anchor vertex " + v + " not in block " + blk.id});
            return;
        }
        if (!used.insert(v).second) {
            out.push_back({traj_id, "anchor-not-cycle",
                           "anchor repeats vertex " + v});
            return;
        }
    }
    for (size_t i = 0; i < anchor.cycle.size(); ++i) {
        const auto& from = anchor.cycle[i];
        const auto& to = anchor.cycle[(i + 1) % anchor.cycle.size()];
        if (!edge_set.count({from, to})) {
            out.push_back({traj_id, "anchor-not-cycle",
                           "anchor edge (" + from + ", " + to + ") missing from block"});
            return;
        }
    }
}

}  // namespace

std::vector<Violation> validate(const SystemDescription& desc) {
    std::vector<Violation> out;
    if (desc.blocks.empty()) {
        out.push_back({"system", "empty-system", "at least one block required"});
    }

    std::unordered_map<std::string, const Block*> by_id;
    for (const auto& b : desc.blocks) {
        if (!by_id.emplace(block_id(b), &b).second) {
            out.push_back({block_id(b), "duplicate-block-id", "block id repeated"});
        }
        if (const auto* ap = std::get_if<AperiodicBlock>(&b)) {
            if (ap->weights.size() != ap->vertices.size()) {
                out.push_back({ap->id, "weight-arity",
                               "weights must parallel the vertex list"});
                continue;
            }
            validate_aperiodic(*ap, out);
        } else if (const auto* cy = std::get_if<CycleBlock>(&b)) {
            if (cy->weights.empty()) {
                out.push_back({cy->id, "empty-cycle", "cycle needs period >= 1"});
            }
            for (const auto& w : cy->weights) check_weight(cy->id, w, out);
        } else {
            validate_clopen(std::get<ClopenPeriodicBlock>(b), out);
        }
    }

    std::unordered_set<std::string> traj_ids;
    for (const auto& t : desc.trajectories) {
        if (!traj_ids.insert(t.id).second) {
            out.push_back({t.id, "duplicate-trajectory-id", "trajectory id repeated"});
        }
        for (const auto& entry : t.core) {
            if (entry.has_value()) check_weight(t.id, *entry, out);
        }
        for (const AnchorRef* anchor : {&t.backward, &t.forward}) {
            auto it = by_id.find(anchor->block);
            if (it == by_id.end()) {
                out.push_back({t.id, "unknown-block",
                               "anchor references missing block " + anchor->block});
                continue;
            }
            validate_anchor(t.id, *anchor, *it->second, out);
        }
    }
    return out;
}

System::System(SystemDescription desc) : desc_(std::move(desc)) {
    auto violations = validate(desc_);
    if (!violations.empty()) throw ValidationError(std::move(violations));

    referenced_.assign(desc_.blocks.size(), false);
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < desc_.blocks.size(); ++i) {
        index[block_id(desc_.blocks[i])] = static_cast<int>(i);
    }

    auto resolve = [&](const AnchorRef& a) {
        ResolvedAnchor r;
        r.block_index = index.at(a.block);
        const Block& blk = desc_.blocks[r.block_index];
        if (const auto* cy = std::get_if<CycleBlock>(&blk)) {
            r.weights = cy->weights;
        } else {
            const auto& ap = std::get<AperiodicBlock>(blk);
            std::unordered_map<std::string, int> vindex;
            for (size_t i = 0; i < ap.vertices.size(); ++i) {
                vindex[ap.vertices[i]] = static_cast<int>(i);
            }
            for (const auto& v : a.cycle) r.weights.push_back(ap.weights[vindex.at(v)]);
        }
        r.offset = mod_index(a.offset, r.period());
        referenced_[r.block_index] = true;
        return r;
    };

    for (const auto& t : desc_.trajectories) {
        backward_.push_back(resolve(t.backward));
        forward_.push_back(resolve(t.forward));
        for (const auto& entry : t.core) {
            if (!entry.has_value()) ++zero_count_;
        }
    }
}

int System::block_index(const std::string& id) const {
    for (size_t i = 0; i < desc_.blocks.size(); ++i) {
        if (block_id(desc_.blocks[i]) == id) return static_cast<int>(i);
    }
    return -1;
}

CoreEntry System::weight_at(size_t traj, long i) const {
    const auto& t = desc_.trajectories[traj];
    long core_len = static_cast<long>(t.core.size());
    if (i >= 0 && i < core_len) return t.core[i];
    if (i >= core_len) {
        const auto& fw = forward_[traj];
        return fw.weights[mod_index(fw.offset + (i - core_len), fw.period())];
    }
    const auto& bw = backward_[traj];
    return bw.weights[mod_index(bw.offset + i, bw.period())];
}

SystemDescription System::reversed() const {
    SystemDescription out;
    for (const auto& b : desc_.blocks) {
        if (const auto* ap = std::get_if<AperiodicBlock>(&b)) {
            AperiodicBlock r = *ap;
            for (auto& [from, to] : r.edges) std::swap(from, to);
            out.blocks.push_back(std::move(r));
        } else if (const auto* cy = std::get_if<CycleBlock>(&b)) {
            CycleBlock r{cy->id, {}};
            int p = static_cast<int>(cy->weights.size());
            for (int m = 0; m < p; ++m) r.weights.push_back(cy->weights[mod_index(-m, p)]);
            out.blocks.push_back(std::move(r));
        } else {
            out.blocks.push_back(b);  // period products are direction-free
        }
    }

    auto reverse_anchor = [](const AnchorRef& a, int period) {
        AnchorRef r;
        r.block = a.block;
        int p = static_cast<int>(a.cycle.size());
        for (int m = 0; m < p; ++m) r.cycle.push_back(a.cycle[mod_index(-m, p)]);
        r.offset = mod_index(1 - a.offset, period);
        return r;
    };

    for (size_t ti = 0; ti < desc_.trajectories.size(); ++ti) {
        const auto& t = desc_.trajectories[ti];
        Trajectory r;
        r.id = t.id;
        r.backward = reverse_anchor(t.forward, forward_[ti].period());
        r.forward = reverse_anchor(t.backward, backward_[ti].period());
        r.core.assign(t.core.rbegin(), t.core.rend());
        out.trajectories.push_back(std::move(r));
    }
    return out;
}

}  // namespace spectrakit
