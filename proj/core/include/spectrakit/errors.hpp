#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spectrakit {

// One broken validation rule, tied to the entity that broke it.
struct Violation {
    std::string entity;  // block / trajectory / vertex id
    std::string rule;    // stable machine-readable rule name
    std::string message;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string summarize(const std::vector<Violation>& vs) {
        std::string s = "system validation failed";
        for (const auto& v : vs) {
            s += "\n  [" + v.entity + "] " + v.rule + ": " + v.message;
        }
        return s;
    }
    std::vector<Violation> violations_;
};

// Raised when an operation is asked for something outside its contract:
// code is one of ZeroWeightUnsupported, ZeroLambda, TooLarge, NotFinite.
class UnsupportedError : public std::runtime_error {
public:
    UnsupportedError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace spectrakit
