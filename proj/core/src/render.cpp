#include "spectrakit/render.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spectrakit {

namespace {

struct Layer {
    const char* name;
    const SpectralSet* set;
};

std::vector<Layer> layer_table(const SpectralSet& spectrum, const EssentialSpectra& ess) {
    return {{"sigma(T)", &spectrum}, {"sigma1", &ess.sigma1}, {"sigma2", &ess.sigma2},
            {"sigma3", &ess.sigma3}, {"sigma4", &ess.sigma4}, {"sigma5", &ess.sigma5}};
}

std::vector<double> critical_radii(const std::vector<Layer>& layers) {
    std::vector<double> radii;
    for (const auto& layer : layers) {
        for (const auto& iv : layer.set->radial()) {
            radii.push_back(iv.lo);
            radii.push_back(iv.hi);
        }
        for (const auto& p : layer.set->points()) radii.push_back(p.logmod);
    }
    std::sort(radii.begin(), radii.end(), std::greater<double>());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    return radii;
}

char layer_marker(const SpectralSet& s, double r) {
    if (s.radius_covered(r)) return '#';
    for (const auto& p : s.points()) {
        if (p.logmod == r) return 'o';
    }
    return '.';
}

}  // namespace

std::string render_ascii(const SpectralSet& spectrum, const EssentialSpectra& ess) {
    auto layers = layer_table(spectrum, ess);
    auto radii = critical_radii(layers);

    std::vector<std::string> labels;
    size_t width = std::string("log-radius").size();
    for (double r : radii) {
        labels.push_back(format_double(r));
        width = std::max(width, labels.back().size());
    }

    auto pad = [&](std::string s) {
        s.resize(width, ' ');
        return s;
    };

    std::string out = pad("log-radius");
    out += "  S(T) s1 s2 s3 s4 s5  at this radius\n";

    for (size_t i = 0; i < radii.size(); ++i) {
        double r = radii[i];
        out += pad(labels[i]);
        out += "   ";
        for (size_t li = 0; li < layers.size(); ++li) {
            out += layer_marker(*layers[li].set, r);
            out += li == 0 ? "   " : "  ";
        }

        std::string features;
        auto note = [&](const std::string& s) {
            if (!features.empty()) features += "; ";
            features += s;
        };
        for (const auto& iv : spectrum.radial()) {
            if (iv.lo == r && iv.hi == r) {
                note("circle");
            } else if (iv.hi == r) {
                note("outer edge of annulus [" + format_double(iv.lo) + ", " +
                     format_double(iv.hi) + "]");
            } else if (iv.lo == r) {
                note("inner edge of annulus [" + format_double(iv.lo) + ", " +
                     format_double(iv.hi) + "]");
            } else if (iv.lo < r && r < iv.hi) {
                note("annulus interior");
            }
        }
        std::string phases;
        for (const auto& p : spectrum.points()) {
            if (p.logmod != r) continue;
            if (!phases.empty()) phases += ", ";
            phases += format_double(p.phase);
        }
        if (!phases.empty()) note("point(s) at phase " + phases);
        out += features;
        out += "\n";
    }

    if (spectrum.includes_zero()) {
        out += pad("origin");
        out += "   #   .  .  .  .  .  zero weight puts 0 in the spectrum\n";
    }
    out += "rho_e = ";
    out += ess.rho_e ? format_double(*ess.rho_e) : "none";
    out += "\n";
    return out;
}

namespace {

constexpr double kCx = 240.0;
constexpr double kCy = 240.0;
constexpr double kInnerPx = 60.0;
constexpr double kOuterPx = 200.0;

std::string num(double x) { return format_double(x); }

// Full-circle subpath around (kCx, kCy); two arcs, endpoint back at start.
std::string circle_subpath(double px) {
    std::string right = num(kCx + px) + "," + num(kCy);
    std::string left = num(kCx - px) + "," + num(kCy);
    std::string r = num(px);
    return "M" + right + " A" + r + "," + r + " 0 1,0 " + left + " A" + r + "," + r +
           " 0 1,0 " + right + " Z";
}

std::string svg_circle(double px, const std::string& attrs) {
    return "<circle cx=\"" + num(kCx) + "\" cy=\"" + num(kCy) + "\" r=\"" + num(px) +
           "\" " + attrs + "/>\n";
}

}  // namespace

std::string render_svg(const SpectralSet& spectrum, const EssentialSpectra& ess) {
    auto layers = layer_table(spectrum, ess);
    auto radii = critical_radii(layers);

    double rmax = radii.empty() ? 0.0 : radii.front();
    double rmin = radii.empty() ? 0.0 : radii.back();
    auto px = [&](double r) {
        if (rmax == rmin) return 0.5 * (kInnerPx + kOuterPx);
        return kInnerPx + (r - rmin) * (kOuterPx - kInnerPx) / (rmax - rmin);
    };

    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
        "viewBox=\"0 0 640 480\">\n"
        "<rect width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";

    // Outward-in so the darker (smaller) layers paint over the lighter ones.
    struct Fill {
        const SpectralSet* set;
        const char* color;
        const char* name;
    };
    const Fill fills[] = {{&ess.sigma5, "#e3edf8", "sigma5"},
                          {&ess.sigma4, "#c7dcf2", "sigma4"},
                          {&ess.sigma3, "#9cc2e8", "sigma3"},
                          {&ess.sigma2, "#6da4da", "sigma2"},
                          {&ess.sigma1, "#3d7fc1", "sigma1"}};
    for (const auto& f : fills) {
        for (const auto& iv : f.set->radial()) {
            if (iv.lo == iv.hi) {
                out += svg_circle(px(iv.lo), "fill=\"none\" stroke=\"" +
                                                 std::string(f.color) +
                                                 "\" stroke-width=\"4\"");
            } else {
                out += "<path d=\"" + circle_subpath(px(iv.hi)) + " " +
                       circle_subpath(px(iv.lo)) + "\" fill=\"" + f.color +
                       "\" fill-rule=\"evenodd\"/>\n";
            }
        }
        for (const auto& p : f.set->points()) {
            double a = 2.0 * M_PI * p.phase;
            double pr = px(p.logmod);
            out += "<circle cx=\"" + num(kCx + pr * std::cos(a)) + "\" cy=\"" +
                   num(kCy - pr * std::sin(a)) + "\" r=\"4\" fill=\"" + f.color +
                   "\"/>\n";
        }
    }

    // sigma(T) boundaries and points on top.
    for (const auto& iv : spectrum.radial()) {
        out += svg_circle(px(iv.lo),
                          "fill=\"none\" stroke=\"#111111\" stroke-width=\"1.5\" "
                          "stroke-dasharray=\"6,4\"");
        if (iv.hi != iv.lo) {
            out += svg_circle(px(iv.hi),
                              "fill=\"none\" stroke=\"#111111\" stroke-width=\"1.5\" "
                              "stroke-dasharray=\"6,4\"");
        }
    }
    for (const auto& p : spectrum.points()) {
        double a = 2.0 * M_PI * p.phase;
        double pr = px(p.logmod);
        out += "<circle cx=\"" + num(kCx + pr * std::cos(a)) + "\" cy=\"" +
               num(kCy - pr * std::sin(a)) + "\" r=\"3\" fill=\"#111111\"/>\n";
    }
    if (spectrum.includes_zero()) {
        out += "<circle cx=\"" + num(kCx) + "\" cy=\"" + num(kCy) +
               "\" r=\"3\" fill=\"#111111\"/>\n";
    }

    double ly = 40.0;
    auto legend_row = [&](const std::string& swatch, const std::string& label) {
        out += swatch;
        out += "<text x=\"520\" y=\"" + num(ly + 12.0) +
               "\" font-family=\"monospace\" font-size=\"14\">" + label + "</text>\n";
        ly += 26.0;
    };
    for (int i = 4; i >= 0; --i) {
        legend_row("<rect x=\"492\" y=\"" + num(ly) +
                       "\" width=\"20\" height=\"14\" fill=\"" +
                       std::string(fills[i].color) + "\"/>\n",
                   fills[i].name);
    }
    legend_row("<line x1=\"492\" y1=\"" + num(ly + 7.0) + "\" x2=\"512\" y2=\"" +
                   num(ly + 7.0) +
                   "\" stroke=\"#111111\" stroke-width=\"1.5\" "
                   "stroke-dasharray=\"6,4\"/>\n",
               "sigma(T) edge");
    legend_row("<circle cx=\"502\" cy=\"" + num(ly + 7.0) +
                   "\" r=\"3\" fill=\"#111111\"/>\n",
               "discrete point");
    out += "<text x=\"492\" y=\"" + num(ly + 12.0) +
           "\" font-family=\"monospace\" font-size=\"14\">rho_e = " +
           (ess.rho_e ? format_double(*ess.rho_e) : std::string("none")) + "</text>\n";

    // Log-radius axis along +x with tick labels at the critical radii.
    out += "<line x1=\"" + num(kCx) + "\" y1=\"" + num(kCy) + "\" x2=\"" +
           num(kCx + kOuterPx + 20.0) + "\" y2=\"" + num(kCy) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    for (double r : radii) {
        double x = kCx + px(r);
        out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kCy - 4.0) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(kCy + 4.0) +
               "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        out += "<text x=\"" + num(x) + "\" y=\"" + num(kCy + 18.0) +
               "\" font-family=\"monospace\" font-size=\"10\" "
               "text-anchor=\"middle\">" +
               format_double(r) + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace spectrakit
