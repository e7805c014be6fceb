#include "spectrakit/graph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace spectrakit {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) adj[e.from].push_back(e.to);
    return adj;
}

}  // namespace

std::vector<std::vector<int>> scc_decompose(int n, const std::vector<Edge>& edges) {
    auto adj = adjacency(n, edges);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> sccs;
    int next_index = 0;

    // Explicit DFS frames: (vertex, position in its adjacency list).
    std::vector<std::pair<int, size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (pos < adj[v].size()) {
                int w = adj[v][pos++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<int> scc;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = static_cast<int>(sccs.size());
                        scc.push_back(w);
                    } while (w != v);
                    std::sort(scc.begin(), scc.end());
                    sccs.push_back(std::move(scc));
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty() && on_stack[finished]) {
                    low[frames.back().first] =
                        std::min(low[frames.back().first], low[finished]);
                }
            }
        }
    }
    // Tarjan emits components in reverse topological order.
    std::reverse(sccs.begin(), sccs.end());
    return sccs;
}

bool strongly_connected(int n, const std::vector<Edge>& edges) {
    if (n == 0) return false;
    return scc_decompose(n, edges).size() == 1;
}

MeanRatio max_cycle_mean_karp(int n, const std::vector<Edge>& edges) {
    assert(n > 0 && !edges.empty());
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();

    // D[k][v]: max weight over walks of exactly k edges from vertex 0 to v.
    std::vector<std::vector<double>> D(n + 1, std::vector<double>(n, kNegInf));
    D[0][0] = 0.0;
    for (int k = 1; k <= n; ++k) {
        for (const auto& e : edges) {
            if (D[k - 1][e.from] == kNegInf) continue;
            double cand = D[k - 1][e.from] + e.weight;
            if (cand > D[k][e.to]) D[k][e.to] = cand;
        }
    }

    // max over v of min over k of (D[n][v] - D[k][v]) / (n - k), with the
    // min/max resolved by exact cross-multiplied comparisons.
    bool have_best = false;
    MeanRatio best{0.0, 1};
    for (int v = 0; v < n; ++v) {
        if (D[n][v] == kNegInf) continue;
        bool have_inner = false;
        MeanRatio inner{0.0, 1};
        for (int k = 0; k < n; ++k) {
            if (D[k][v] == kNegInf) continue;
            MeanRatio cand{D[n][v] - D[k][v], n - k};
            if (!have_inner || compare(cand, inner) < 0) {
                inner = cand;
                have_inner = true;
            }
        }
        // A walk of n edges repeats a vertex, so a shorter prefix exists.
        assert(have_inner);
        if (!have_best || compare(inner, best) > 0) {
            best = inner;
            have_best = true;
        }
    }
    assert(have_best);
    return best;
}

MeanRatio min_cycle_mean_karp(int n, const std::vector<Edge>& edges) {
    std::vector<Edge> negated = edges;
    for (auto& e : negated) e.weight = -e.weight;
    MeanRatio m = max_cycle_mean_karp(n, negated);
    return {-m.sum, m.len};
}

}  // namespace spectrakit
