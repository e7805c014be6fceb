#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "spectrakit/classifier.hpp"
#include "spectrakit/essential.hpp"
#include "spectrakit/graph.hpp"
#include "spectrakit/oracle.hpp"
#include "spectrakit/resolvent.hpp"
#include "spectrakit/spectral_set.hpp"
#include "spectrakit/system.hpp"

using namespace spectrakit;

namespace {

// Ring plus n random chords: strongly connected, out-degree >= 1 everywhere.
std::vector<Edge> ring_with_chords(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    auto logmod = [&] { return static_cast<double>(rng() % 33) / 8.0 - 2.0; };
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, logmod()});
    for (int c = 0; c < n; ++c) {
        Edge e{static_cast<int>(rng() % n), static_cast<int>(rng() % n), logmod()};
        bool dup = false;
        for (const auto& have : edges) {
            dup = dup || (have.from == e.from && have.to == e.to);
        }
        if (!dup) edges.push_back(e);
    }
    return edges;
}

// A mid-sized mixed system: two aperiodic blocks, two cycles, one clopen
// family, four orbits between the cycles.
SystemDescription mixed_system() {
    SystemDescription d;
    for (int bi = 0; bi < 2; ++bi) {
        AperiodicBlock a;
        a.id = "a" + std::to_string(bi);
        for (int v = 0; v < 4; ++v) {
            a.vertices.push_back(a.id + "v" + std::to_string(v));
            a.weights.push_back({static_cast<double>(v - bi) / 4.0, 0.25 * v});
        }
        for (int v = 0; v < 4; ++v) a.edges.push_back({a.vertices[v], a.vertices[(v + 1) % 4]});
        a.edges.push_back({a.vertices[0], a.vertices[2]});
        a.edges.push_back({a.vertices[2], a.vertices[0]});
        d.blocks.push_back(std::move(a));
    }
    d.blocks.push_back(CycleBlock{"lo", {{-1.5, 0.0}, {-1.0, 0.5}}});
    d.blocks.push_back(CycleBlock{"hi", {{1.0, 0.25}, {1.5, 0.0}, {2.0, 0.75}}});
    d.blocks.push_back(ClopenPeriodicBlock{
        "p", 2, {PointProduct{0.5, 0.125}, ModulusBand{-0.5, 0.25}}});
    for (int ti = 0; ti < 4; ++ti) {
        Trajectory t;
        t.id = "t" + std::to_string(ti);
        t.backward = {ti % 2 == 0 ? "lo" : "hi", {}, ti};
        t.forward = {ti % 2 == 0 ? "hi" : "lo", {}, ti + 1};
        for (int c = 0; c < ti; ++c) t.core.push_back(LogWeight{0.25 * c, 0.0});
        d.trajectories.push_back(std::move(t));
    }
    return d;
}

}  // namespace

static void BM_MaxCycleMeanKarp(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto edges = ring_with_chords(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_cycle_mean_karp(n, edges));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_MaxCycleMeanKarp)->RangeMultiplier(4)->Range(8, 512)->Complexity();

static void BM_EnumerateCycleMeans(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto edges = ring_with_chords(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_cycle_means(n, edges));
    }
}
BENCHMARK(BM_EnumerateCycleMeans)->DenseRange(4, 12, 2);

static void BM_FullSpectrum(benchmark::State& state) {
    System sys{mixed_system()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_spectrum(sys));
    }
}
BENCHMARK(BM_FullSpectrum);

static void BM_Classify(benchmark::State& state) {
    System sys{mixed_system()};
    LogPolar lambda{0.125, 0.375};
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(sys, lambda));
    }
}
BENCHMARK(BM_Classify);

static void BM_EssentialSpectra(benchmark::State& state) {
    System sys{mixed_system()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(essential_spectra(sys));
    }
}
BENCHMARK(BM_EssentialSpectra);

static void BM_SetUnion(benchmark::State& state) {
    long n = state.range(0);
    SpectralSet a, b;
    for (long i = 0; i < n; ++i) {
        a.add_interval(3.0 * static_cast<double>(i), 3.0 * static_cast<double>(i) + 1.0);
        b.add_interval(3.0 * static_cast<double>(i) + 1.5,
                       3.0 * static_cast<double>(i) + 2.0);
        b.add_point({3.0 * static_cast<double>(i) + 1.25, 0.5});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(set_union(a, b));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SetUnion)->RangeMultiplier(4)->Range(4, 256)->Complexity();

BENCHMARK_MAIN();
