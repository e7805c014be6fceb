#include "spectrakit/cycle_means.hpp"

#include <algorithm>
#include <unordered_map>

namespace spectrakit {

std::vector<Edge> block_edges(const AperiodicBlock& b) {
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < b.vertices.size(); ++i) index[b.vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    edges.reserve(b.edges.size());
    for (const auto& [from, to] : b.edges) {
        int fi = index.at(from);
        edges.push_back({fi, index.at(to), b.weights[fi].logmod});
    }
    return edges;
}

double max_cycle_mean(const AperiodicBlock& b) {
    return max_cycle_mean_karp(static_cast<int>(b.vertices.size()), block_edges(b)).value();
}

double min_cycle_mean(const AperiodicBlock& b) {
    return min_cycle_mean_karp(static_cast<int>(b.vertices.size()), block_edges(b)).value();
}

std::vector<LogPolar> cycle_eigenpoints(LogPolar product, int period) {
    std::vector<LogPolar> roots;
    double p = static_cast<double>(period);
    for (int j = 0; j < period; ++j) {
        roots.push_back({product.logmod / p,
                         frac_turns((product.phase + static_cast<double>(j)) / p)});
    }
    return roots;
}

BlockSpectrumSummary block_radial_spectrum(const System& sys, size_t block_index) {
    BlockSpectrumSummary out;
    out.block_index = static_cast<int>(block_index);
    const Block& b = sys.block(block_index);

    if (const auto* ap = std::get_if<AperiodicBlock>(&b)) {
        out.kind = BlockKind::Aperiodic;
        out.min_mean = min_cycle_mean(*ap);
        out.max_mean = max_cycle_mean(*ap);
        out.radial = SpectralSet::annulus(out.min_mean, out.max_mean);
        return out;
    }
    if (const auto* cy = std::get_if<CycleBlock>(&b)) {
        out.kind = BlockKind::Cycle;
        out.isolated = sys.cycle_isolated(block_index);
        // Sorted accumulation: the product is bit-identical under any
        // rotation or reversal of the weight list.
        std::vector<double> logmods, phases;
        for (const auto& w : cy->weights) {
            logmods.push_back(w.logmod);
            phases.push_back(w.phase);
        }
        std::sort(logmods.begin(), logmods.end());
        std::sort(phases.begin(), phases.end());
        MeanRatio mean{0.0, static_cast<int>(cy->weights.size())};
        for (double v : logmods) mean.sum += v;
        double phase = 0.0;
        for (double v : phases) phase = frac_turns(phase + v);
        out.product = {mean.sum, phase};
        out.min_mean = out.max_mean = mean.value();
        if (out.isolated) {
            out.eigenpoints = cycle_eigenpoints(out.product, mean.len);
            for (const auto& pt : out.eigenpoints) out.radial.add_point(pt);
        } else {
            out.radial = SpectralSet::circle(out.min_mean);
        }
        return out;
    }

    const auto& cl = std::get<ClopenPeriodicBlock>(b);
    out.kind = BlockKind::ClopenPeriodic;
    double p = static_cast<double>(cl.period);
    for (const auto& spec : cl.products) {
        if (const auto* pt = std::get_if<PointProduct>(&spec)) {
            for (const auto& root :
                 cycle_eigenpoints(LogPolar{pt->logmod, pt->phase}, cl.period)) {
                out.radial.add_point(root);
            }
        } else {
            const auto& band = std::get<ModulusBand>(spec);
            out.radial.add_interval(band.lo / p, band.hi / p);
        }
    }
    out.min_mean = *out.radial.min_radius();
    out.max_mean = *out.radial.max_radius();
    return out;
}

std::vector<BlockSpectrumSummary> block_spectra(const System& sys) {
    std::vector<BlockSpectrumSummary> out;
    out.reserve(sys.block_count());
    for (size_t i = 0; i < sys.block_count(); ++i) {
        out.push_back(block_radial_spectrum(sys, i));
    }
    return out;
}

}  // namespace spectrakit
