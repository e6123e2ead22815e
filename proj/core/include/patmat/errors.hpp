#pragma once

#include <stdexcept>
#include <string>

namespace patmat {

// Invalid argument / configuration (bad word, bad alpha, degenerate sigma, ...).
// The CLI maps this to exit code 2.
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An enumeration or storage budget would be exceeded. The message always states
// the budget so the caller knows which knob to turn. CLI exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A label or count would leave the exact 64-bit range. Raised instead of ever
// wrapping silently.
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A map advertised as coordinatewise injective produced a duplicate
// (label, coordinate) key.
struct injectivity_error : std::runtime_error {
    explicit injectivity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical routine failed to converge (eigensolver, quadrature).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace patmat
