#pragma once

// JSON front door. System description files carry reals as decimal strings
// (shortest round-trip decimals re-read to the same double) or plain JSON
// numbers; all emitters print shortest round-trip decimals. The underlying
// JSON library stays an implementation detail of this unit.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectrakit/classifier.hpp"
#include "spectrakit/errors.hpp"
#include "spectrakit/essential.hpp"
#include "spectrakit/oracle.hpp"
#include "spectrakit/spectral_set.hpp"
#include "spectrakit/system.hpp"

namespace spectrakit {

// Malformed input: syntax errors carry the byte offset reported by the
// parser, shape errors carry the offending path in the message and byte 0.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t byte)
        : std::runtime_error(message), byte_(byte) {}

    std::size_t byte() const { return byte_; }

private:
    std::size_t byte_;
};

// Reads {"blocks": [...], "trajectories": [...]} into a raw description;
// validation is the caller's move (System construction or validate()).
SystemDescription parse_system(const std::string& text);

std::string system_to_json(const SystemDescription& desc);

// {"radial": [[lo, hi], ...], "points": [[logmod, phase], ...], "zero": bool}
std::string to_json(const SpectralSet& s);

std::string to_json(const FredholmReport& rep);
std::string to_json(const EssentialSpectra& ess);
std::string violations_to_json(const std::vector<Violation>& vs);
std::string parse_error_to_json(const ParseError& e);
std::string unsupported_to_json(const UnsupportedError& e);

}  // namespace spectrakit
