#pragma once

#include <stdexcept>
#include <string>

namespace ptns {

// Domain error with a stable machine-readable code ("zero-form", "pole-at-zero", ...).
class Error : public std::runtime_error {
public:
    explicit Error(std::string code, const std::string& detail = {})
        : std::runtime_error(detail.empty() ? code : code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed user input; the CLI maps this to exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& detail) : Error("input", detail) {}
};

class PoleError : public Error {
public:
    explicit PoleError(int order)
        : Error("pole-at-zero", "pole of order " + std::to_string(order)), order_(order) {}

    int order() const noexcept { return order_; }

private:
    int order_;
};

}  // namespace ptns
