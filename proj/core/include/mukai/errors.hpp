#pragma once

#include <stdexcept>
#include <string>

namespace mukai {

/// Malformed or inconsistent input: wrong dimensions, broken type invariants,
/// unparseable values.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A mathematical hypothesis of an operation is violated (e.g. a slope bound
/// that the input must satisfy). `code()` is a stable machine-readable tag.
class HypothesisError : public std::domain_error {
public:
    HypothesisError(std::string code, const std::string& msg)
        : std::domain_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace mukai
