#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace valx {

/// Domain-level failure with a stable machine-readable code ("MixedCuts",
/// "NotPseudoCauchy", ...). The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed spec string or literal. The CLI maps these to exit code 1.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void throw_domain(const std::string& code, const std::string& message) {
    throw DomainError(code, message);
}

} // namespace valx
