#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace clln {

// Library failures carry a stable machine-readable code ("NotNormalized",
// "LatticeOverflow", ...) next to the human message. Tests and the CLI
// branch on code(), never on message text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace clln
