// Command-line front end: validate / spectrum / classify / essential /
// verify / render over a system description file. Results print as JSON
// (or an ASCII/SVG diagram); exit 0 on success, 1 for malformed input or
// validation failures, 2 when a request is outside a module's contract.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spectrakit/classifier.hpp"
#include "spectrakit/essential.hpp"
#include "spectrakit/json_io.hpp"
#include "spectrakit/oracle.hpp"
#include "spectrakit/render.hpp"
#include "spectrakit/resolvent.hpp"
#include "spectrakit/system.hpp"

namespace {

using namespace spectrakit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

struct LambdaArgs {
    double logmod = 0.0;
    double phase = 0.0;
    double re = 0.0;
    double im = 0.0;
    bool have_logmod = false;
    bool have_phase = false;
    bool have_re = false;
    bool have_im = false;

    Lambda resolve() const {
        bool polar = have_logmod || have_phase;
        bool cartesian = have_re || have_im;
        if (polar && cartesian) {
            throw CLI::ValidationError(
                "lambda", "give either --logmod/--phase or --re/--im, not both");
        }
        if (cartesian) {
            if (re == 0.0 && im == 0.0) return std::nullopt;
            return LogPolar::from_cartesian(re, im);
        }
        if (!polar) {
            throw CLI::ValidationError("lambda",
                                       "classify needs --logmod/--phase or --re/--im");
        }
        return LogPolar{logmod, frac_turns(phase)};
    }
};

std::uint64_t seed_from_env() {
    const char* env = std::getenv("SPECTRAKIT_SEED");
    if (!env || !*env) return 1;
    return std::strtoull(env, nullptr, 10);
}

std::string verify_table(const std::vector<VerificationRow>& rows) {
    size_t check_w = 0;
    for (const auto& r : rows) check_w = std::max(check_w, r.check.size());
    std::string out;
    for (const auto& r : rows) {
        std::string check = r.check;
        check.resize(check_w, ' ');
        std::string status = r.status;
        status.resize(4, ' ');
        out += check + "  " + status + "  " + r.detail + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of weighted composition operators on finitely "
                 "presented compact systems"};
    app.require_subcommand(1);

    std::string system_path;
    std::string out_path;
    std::string format = "ascii";
    LambdaArgs lambda_args;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("system", system_path, "system description JSON file")
            ->required();
        cmd->add_option("--out", out_path, "write output to this file");
        return cmd;
    };

    auto* cmd_validate =
        add_common(app.add_subcommand("validate", "check the description invariants"));
    auto* cmd_spectrum =
        add_common(app.add_subcommand("spectrum", "print sigma(T) as JSON"));
    auto* cmd_classify = add_common(app.add_subcommand(
        "classify", "Fredholm classification of lambda*I - T at one lambda"));
    cmd_classify->add_option("--logmod", lambda_args.logmod, "ln|lambda| (exact form)")
        ->each([&](const std::string&) { lambda_args.have_logmod = true; });
    cmd_classify->add_option("--phase", lambda_args.phase, "arg(lambda) in turns")
        ->each([&](const std::string&) { lambda_args.have_phase = true; });
    cmd_classify->add_option("--re", lambda_args.re, "Re(lambda) (converted)")
        ->each([&](const std::string&) { lambda_args.have_re = true; });
    cmd_classify->add_option("--im", lambda_args.im, "Im(lambda) (converted)")
        ->each([&](const std::string&) { lambda_args.have_im = true; });
    auto* cmd_essential = add_common(
        app.add_subcommand("essential", "print sigma_1..sigma_5, Sigma, rho_e"));
    auto* cmd_verify = add_common(app.add_subcommand(
        "verify", "run the self-check battery (SPECTRAKIT_SEED fixes sampling)"));
    auto* cmd_render =
        add_common(app.add_subcommand("render", "draw the radial spectrum diagram"));
    cmd_render->add_option("--format", format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    CLI11_PARSE(app, argc, argv);

    try {
        SystemDescription desc = parse_system(read_file(system_path));

        if (cmd_validate->parsed()) {
            auto violations = validate(desc);
            emit(violations_to_json(violations), out_path);
            return violations.empty() ? 0 : 1;
        }

        System sys(std::move(desc));
        if (cmd_spectrum->parsed()) {
            emit(to_json(full_spectrum(sys)), out_path);
        } else if (cmd_classify->parsed()) {
            emit(to_json(classify(sys, lambda_args.resolve())), out_path);
        } else if (cmd_essential->parsed()) {
            emit(to_json(essential_spectra(sys)), out_path);
        } else if (cmd_verify->parsed()) {
            auto rows = run_verification(sys, seed_from_env());
            emit(verify_table(rows), out_path);
            for (const auto& r : rows) {
                if (r.status == "FAIL") return 1;
            }
        } else if (cmd_render->parsed()) {
            auto ess = essential_spectra(sys);
            auto spectrum = full_spectrum(sys);
            emit(format == "svg" ? render_svg(spectrum, ess)
                                 : render_ascii(spectrum, ess),
                 out_path);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << parse_error_to_json(e) << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << violations_to_json(e.violations()) << "\n";
        return 1;
    } catch (const UnsupportedError& e) {
        std::cerr << unsupported_to_json(e) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
