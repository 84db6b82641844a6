#pragma once

#include <stdexcept>
#include <string>

namespace kzr {

// Input could not be parsed or violates a structural precondition
// (non-monotone partition, rank mismatch, unknown name).
struct bad_argument : std::runtime_error {
    explicit bad_argument(const std::string& msg) : std::runtime_error(msg) {}
};

// Fusion-mode operand above the level bound.
struct level_error : std::runtime_error {
    explicit level_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Value outside the mathematical domain of an operation
// (kappa <= 0, degree above a weight bound, zero polynomial, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An identity the algorithm relies on failed to hold; indicates a bug
// rather than bad input, so callers should not continue.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kzr
