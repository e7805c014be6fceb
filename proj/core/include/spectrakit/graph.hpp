#pragma once

// Index-based digraph helpers shared by validation and the cycle-mean
// computations. Vertices are 0..n-1; parallel edges are not expected.

#include <vector>

#include "spectrakit/numeric.hpp"

namespace spectrakit {

struct Edge {
    int from = 0;
    int to = 0;
    double weight = 0.0;
};

// Strongly connected components in topological order of the condensation
// (sources first). Tarjan, iterative.
std::vector<std::vector<int>> scc_decompose(int n, const std::vector<Edge>& edges);

bool strongly_connected(int n, const std::vector<Edge>& edges);

// Karp's dynamic program. Requires a nonempty strongly connected graph in
// which every vertex has an outgoing edge. The result fraction is exact in
// the edge-weight sums; callers divide only for display. Internal order
// comparisons cross-multiply, so dyadic rational weights stay exact.
MeanRatio max_cycle_mean_karp(int n, const std::vector<Edge>& edges);
MeanRatio min_cycle_mean_karp(int n, const std::vector<Edge>& edges);

}  // namespace spectrakit
