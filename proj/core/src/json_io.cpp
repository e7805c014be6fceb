#include "spectrakit/json_io.hpp"

#include <cerrno>
#include <cstdlib>

#include <json.hpp>

namespace spectrakit {

namespace {

using njson = nlohmann::ordered_json;

double parse_real(const njson& v, const std::string& where) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        errno = 0;
        char* end = nullptr;
        double x = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
            throw ParseError(where + ": cannot read \"" + s + "\" as a decimal", 0);
        }
        return x;
    }
    if (v.is_number()) return v.get<double>();
    throw ParseError(where + ": expected a decimal string or number", 0);
}

const njson& require(const njson& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + ": missing \"" + key + "\"", 0);
    }
    return obj.at(key);
}

std::string require_string(const njson& obj, const char* key, const std::string& where) {
    const njson& v = require(obj, key, where);
    if (!v.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string", 0);
    return v.get<std::string>();
}

LogWeight parse_weight(const njson& v, const std::string& where) {
    return {parse_real(require(v, "logmod", where), where + ".logmod"),
            parse_real(require(v, "phase", where), where + ".phase")};
}

AnchorRef parse_anchor(const njson& traj, const char* block_key, const char* anchor_key,
                       const std::string& where) {
    AnchorRef a;
    a.block = require_string(traj, block_key, where);
    if (!traj.contains(anchor_key)) return a;  // cycle-block anchors may be implicit
    const njson& v = traj.at(anchor_key);
    std::string here = where + "." + anchor_key;
    if (!v.is_object()) throw ParseError(here + ": expected an object", 0);
    if (v.contains("cycle")) {
        const njson& cyc = v.at("cycle");
        if (!cyc.is_array()) throw ParseError(here + ".cycle: expected an array", 0);
        for (const auto& item : cyc) {
            if (!item.is_string()) {
                throw ParseError(here + ".cycle: vertex ids must be strings", 0);
            }
            a.cycle.push_back(item.get<std::string>());
        }
    }
    if (v.contains("offset")) {
        const njson& off = v.at("offset");
        if (!off.is_number_integer()) {
            throw ParseError(here + ".offset: expected an integer", 0);
        }
        a.offset = off.get<long>();
    }
    return a;
}

Block parse_block(const njson& v, size_t index) {
    std::string where = "blocks[" + std::to_string(index) + "]";
    std::string kind = require_string(v, "kind", where);
    std::string id = require_string(v, "id", where);

    if (kind == "aperiodic") {
        AperiodicBlock b;
        b.id = id;
        const njson& verts = require(v, "vertices", where);
        if (!verts.is_array()) throw ParseError(where + ".vertices: expected an array", 0);
        for (size_t i = 0; i < verts.size(); ++i) {
            std::string here = where + ".vertices[" + std::to_string(i) + "]";
            b.vertices.push_back(require_string(verts[i], "id", here));
            b.weights.push_back(parse_weight(verts[i], here));
        }
        const njson& edges = require(v, "edges", where);
        if (!edges.is_array()) throw ParseError(where + ".edges: expected an array", 0);
        for (size_t i = 0; i < edges.size(); ++i) {
            const njson& e = edges[i];
            std::string here = where + ".edges[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                throw ParseError(here + ": expected [\"from\", \"to\"]", 0);
            }
            b.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
        }
        return b;
    }
    if (kind == "cycle") {
        CycleBlock b;
        b.id = id;
        const njson& ws = require(v, "weights", where);
        if (!ws.is_array()) throw ParseError(where + ".weights: expected an array", 0);
        for (size_t i = 0; i < ws.size(); ++i) {
            b.weights.push_back(
                parse_weight(ws[i], where + ".weights[" + std::to_string(i) + "]"));
        }
        return b;
    }
    if (kind == "clopen_periodic") {
        ClopenPeriodicBlock b;
        b.id = id;
        const njson& period = require(v, "period", where);
        if (!period.is_number_integer()) {
            throw ParseError(where + ".period: expected an integer", 0);
        }
        b.period = period.get<int>();
        const njson& products = require(v, "products", where);
        if (!products.is_array()) {
            throw ParseError(where + ".products: expected an array", 0);
        }
        for (size_t i = 0; i < products.size(); ++i) {
            const njson& p = products[i];
            std::string here = where + ".products[" + std::to_string(i) + "]";
            std::string type = require_string(p, "type", here);
            if (type == "point") {
                b.products.push_back(PointProduct{
                    parse_real(require(p, "logmod", here), here + ".logmod"),
                    parse_real(require(p, "phase", here), here + ".phase")});
            } else if (type == "band") {
                b.products.push_back(
                    ModulusBand{parse_real(require(p, "lo", here), here + ".lo"),
                                parse_real(require(p, "hi", here), here + ".hi")});
            } else {
                throw ParseError(here + ".type: expected \"point\" or \"band\"", 0);
            }
        }
        return b;
    }
    throw ParseError(where + ".kind: expected \"aperiodic\", \"cycle\", or "
                             "\"clopen_periodic\"",
                     0);
}

Trajectory parse_trajectory(const njson& v, size_t index) {
    std::string where = "trajectories[" + std::to_string(index) + "]";
    Trajectory t;
    t.id = require_string(v, "id", where);
    t.backward = parse_anchor(v, "backward_block", "backward_anchor", where);
    t.forward = parse_anchor(v, "forward_block", "forward_anchor", where);
    if (v.contains("core")) {
        const njson& core = v.at("core");
        if (!core.is_array()) throw ParseError(where + ".core: expected an array", 0);
        for (size_t i = 0; i < core.size(); ++i) {
            const njson& e = core[i];
            std::string here = where + ".core[" + std::to_string(i) + "]";
            if (e.is_string() && e.get<std::string>() == "zero") {
                t.core.push_back(std::nullopt);
            } else if (e.is_object()) {
                t.core.push_back(parse_weight(e, here));
            } else {
                throw ParseError(here + ": expected a weight object or \"zero\"", 0);
            }
        }
    }
    return t;
}

njson weight_json(const LogWeight& w) {
    return njson{{"logmod", format_double(w.logmod)}, {"phase", format_double(w.phase)}};
}

njson anchor_json(const AnchorRef& a) {
    njson v = njson::object();
    if (!a.cycle.empty()) v["cycle"] = a.cycle;
    v["offset"] = a.offset;
    return v;
}

njson set_json(const SpectralSet& s) {
    njson radial = njson::array();
    for (const auto& iv : s.radial()) radial.push_back({iv.lo, iv.hi});
    njson points = njson::array();
    for (const auto& p : s.points()) points.push_back({p.logmod, p.phase});
    return njson{{"radial", std::move(radial)},
                 {"points", std::move(points)},
                 {"zero", s.includes_zero()}};
}

}  // namespace

SystemDescription parse_system(const std::string& text) {
    njson root;
    try {
        root = njson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!root.is_object()) throw ParseError("top level: expected an object", 0);

    SystemDescription desc;
    const njson& blocks = require(root, "blocks", "top level");
    if (!blocks.is_array()) throw ParseError("\"blocks\": expected an array", 0);
    for (size_t i = 0; i < blocks.size(); ++i) {
        desc.blocks.push_back(parse_block(blocks[i], i));
    }
    if (root.contains("trajectories")) {
        const njson& trajs = root.at("trajectories");
        if (!trajs.is_array()) {
            throw ParseError("\"trajectories\": expected an array", 0);
        }
        for (size_t i = 0; i < trajs.size(); ++i) {
            desc.trajectories.push_back(parse_trajectory(trajs[i], i));
        }
    }
    return desc;
}

std::string system_to_json(const SystemDescription& desc) {
    njson blocks = njson::array();
    for (const auto& b : desc.blocks) {
        if (const auto* ap = std::get_if<AperiodicBlock>(&b)) {
            njson verts = njson::array();
            for (size_t i = 0; i < ap->vertices.size(); ++i) {
                njson v;
                v["id"] = ap->vertices[i];
                v["logmod"] = format_double(ap->weights[i].logmod);
                v["phase"] = format_double(ap->weights[i].phase);
                verts.push_back(std::move(v));
            }
            njson edges = njson::array();
            for (const auto& [from, to] : ap->edges) edges.push_back({from, to});
            blocks.push_back(njson{{"kind", "aperiodic"},
                                   {"id", ap->id},
                                   {"vertices", std::move(verts)},
                                   {"edges", std::move(edges)}});
        } else if (const auto* cy = std::get_if<CycleBlock>(&b)) {
            njson ws = njson::array();
            for (const auto& w : cy->weights) ws.push_back(weight_json(w));
            blocks.push_back(
                njson{{"kind", "cycle"}, {"id", cy->id}, {"weights", std::move(ws)}});
        } else {
            const auto& cl = std::get<ClopenPeriodicBlock>(b);
            njson products = njson::array();
            for (const auto& p : cl.products) {
                if (const auto* pt = std::get_if<PointProduct>(&p)) {
                    products.push_back(njson{{"type", "point"},
                                             {"logmod", format_double(pt->logmod)},
                                             {"phase", format_double(pt->phase)}});
                } else {
                    const auto& band = std::get<ModulusBand>(p);
                    products.push_back(njson{{"type", "band"},
                                             {"lo", format_double(band.lo)},
                                             {"hi", format_double(band.hi)}});
                }
            }
            blocks.push_back(njson{{"kind", "clopen_periodic"},
                                   {"id", cl.id},
                                   {"period", cl.period},
                                   {"products", std::move(products)}});
        }
    }

    njson trajs = njson::array();
    for (const auto& t : desc.trajectories) {
        njson core = njson::array();
        for (const auto& e : t.core) {
            if (e.has_value()) {
                core.push_back(weight_json(*e));
            } else {
                core.push_back("zero");
            }
        }
        trajs.push_back(njson{{"id", t.id},
                              {"backward_block", t.backward.block},
                              {"backward_anchor", anchor_json(t.backward)},
                              {"core", std::move(core)},
                              {"forward_block", t.forward.block},
                              {"forward_anchor", anchor_json(t.forward)}});
    }

    return njson{{"blocks", std::move(blocks)}, {"trajectories", std::move(trajs)}}
        .dump(2);
}

std::string to_json(const SpectralSet& s) { return set_json(s).dump(2); }

std::string to_json(const FredholmReport& rep) {
    njson out;
    if (rep.lambda.has_value()) {
        out["lambda"] = njson{{"logmod", rep.lambda->logmod}, {"phase", rep.lambda->phase}};
    } else {
        out["lambda"] = "zero";
    }
    out["status"] = to_string(rep.status);
    switch (rep.status) {
        case FredholmReport::Status::Resolvent:
        case FredholmReport::Status::Fredholm:
            out["nul"] = rep.nul;
            out["def"] = rep.def;
            out["index"] = rep.index;
            break;
        case FredholmReport::Status::SemiFredholmOnly:
            out["finite_side"] =
                rep.finite_side == FredholmReport::FiniteSide::Kernel ? "kernel"
                                                                      : "cokernel";
            out["finite_count"] = rep.finite_count;
            break;
        case FredholmReport::Status::NotSemiFredholm:
            out["witness"] = rep.witness;
            break;
    }
    out["kernel_trajectories"] = rep.kernel_trajectories;
    out["deficiency_trajectories"] = rep.deficiency_trajectories;
    out["matched_cycles"] = rep.matched_cycles;
    if (rep.sigma_membership.has_value()) {
        const auto& m = *rep.sigma_membership;
        out["sigma"] = njson{{"sigma1", m[0]},
                             {"sigma2", m[1]},
                             {"sigma3", m[2]},
                             {"sigma4", m[3]},
                             {"sigma5", m[4]}};
    } else {
        out["sigma"] = nullptr;
    }
    return out.dump(2);
}

std::string to_json(const EssentialSpectra& ess) {
    njson out{{"sigma1", set_json(ess.sigma1)},  {"sigma2", set_json(ess.sigma2)},
              {"sigma3", set_json(ess.sigma3)},  {"sigma4", set_json(ess.sigma4)},
              {"sigma5", set_json(ess.sigma5)},  {"sigma_term", set_json(ess.sigma_term)}};
    if (ess.rho_e.has_value()) {
        out["rho_e"] = *ess.rho_e;
    } else {
        out["rho_e"] = nullptr;
    }
    return out.dump(2);
}

std::string violations_to_json(const std::vector<Violation>& vs) {
    njson rows = njson::array();
    for (const auto& v : vs) {
        rows.push_back(
            njson{{"entity", v.entity}, {"rule", v.rule}, {"message", v.message}});
    }
    return njson{{"violations", std::move(rows)}}.dump(2);
}

std::string parse_error_to_json(const ParseError& e) {
    return njson{{"error", "parse"}, {"byte", e.byte()}, {"message", e.what()}}.dump(2);
}

std::string unsupported_to_json(const UnsupportedError& e) {
    return njson{{"error", e.code()}, {"message", e.what()}}.dump(2);
}

}  // namespace spectrakit
