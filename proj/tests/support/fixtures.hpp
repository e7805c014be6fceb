#pragma once

// Hand-built example systems shared across the test files.

#include <fstream>
#include <sstream>
#include <string>

#include "spectrakit/system.hpp"

namespace testkit {

using namespace spectrakit;

inline constexpr double kLn2 = 0.6931471805599453;

// Two fixed points, weights 1/2 and 2, one orbit drifting from the first to
// the second: the weighted shift whose spectrum is the annulus between the
// two weights.
inline SystemDescription shift2_description() {
    SystemDescription d;
    d.blocks.push_back(CycleBlock{"half", {{-kLn2, 0.0}}});
    d.blocks.push_back(CycleBlock{"two", {{kLn2, 0.0}}});
    d.trajectories.push_back(Trajectory{"t", {"half", {}, 0}, {}, {"two", {}, 0}});
    return d;
}

// One aperiodic block, every logmod zero: a figure-eight on two loops.
inline SystemDescription aperiodic_zero_description() {
    AperiodicBlock b;
    b.id = "a";
    b.vertices = {"a0", "a1"};
    b.weights = {{0.0, 0.0}, {0.0, 0.0}};
    b.edges = {{"a0", "a1"}, {"a1", "a0"}, {"a0", "a0"}};
    SystemDescription d;
    d.blocks.push_back(std::move(b));
    return d;
}

// Single unreferenced 2-cycle with unit weights: spectrum {1, -1}.
inline SystemDescription isolated_p2_description() {
    SystemDescription d;
    d.blocks.push_back(CycleBlock{"c", {{0.0, 0.0}, {0.0, 0.0}}});
    return d;
}

// Single unreferenced fixed point with weight 1.
inline SystemDescription isolated_p1_description() {
    SystemDescription d;
    d.blocks.push_back(CycleBlock{"c", {{0.0, 0.0}}});
    return d;
}

// Two fixed points 1/2 and 2 joined by two orbits of opposite orientation.
inline SystemDescription opposite_pair_description() {
    SystemDescription d;
    d.blocks.push_back(CycleBlock{"half", {{-kLn2, 0.0}}});
    d.blocks.push_back(CycleBlock{"two", {{kLn2, 0.0}}});
    d.trajectories.push_back(Trajectory{"up", {"half", {}, 0}, {}, {"two", {}, 0}});
    d.trajectories.push_back(Trajectory{"down", {"two", {}, 0}, {}, {"half", {}, 0}});
    return d;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string data_path(const std::string& name) {
    return std::string(SPECTRAKIT_TEST_DATA_DIR) + "/" + name;
}

}  // namespace testkit
