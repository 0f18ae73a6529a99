#pragma once

#include <stdexcept>
#include <string>

namespace swmod {

// Base for everything the CLI maps to exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Momentum ladder radicand p0^2 + 2 m n hbar omega went nonpositive.
struct LadderUnderflow : NumericalError {
    using NumericalError::NumericalError;
};

// Classical turning point inside the standing wave: p_n^2 <= 2 m V0.
struct TurningPoint : NumericalError {
    using NumericalError::NumericalError;
};

struct StepSizeUnderflow : NumericalError {
    using NumericalError::NumericalError;
};

struct NonFinite : NumericalError {
    using NumericalError::NumericalError;
};

struct NoResonance : NumericalError {
    using NumericalError::NumericalError;
};

struct QuadratureNonConvergence : NumericalError {
    using NumericalError::NumericalError;
};

// Config-file problems; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& key, const std::string& reason)
        : std::runtime_error(key.empty() ? reason : key + ": " + reason), key(key) {}
    std::string key;
};

}  // namespace swmod
