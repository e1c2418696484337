#pragma once

#include <stdexcept>
#include <string>

namespace delcon {

// Malformed or out-of-range input (bad probabilities, unknown ids, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (cycling past the iteration cap, ...).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds an enumerable size or node budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace delcon
