#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Invalid user-supplied parameter. Maps to CLI exit code 2.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A randomized generator gave up after exhausting its retry budget.
struct GenerationError : std::runtime_error {
    GenerationError(const std::string& msg, long long attempts_made)
        : std::runtime_error(msg), attempts(attempts_made) {}
    long long attempts;
};

/// A numerical routine failed to reach its tolerance. Maps to CLI exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg, double achieved_residual = 0.0)
        : std::runtime_error(msg), achieved(achieved_residual) {}
    double achieved;
};

/// Filesystem or serialization failure. Maps to CLI exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qwalk
