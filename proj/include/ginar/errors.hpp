#pragma once

#include <stdexcept>
#include <string>

namespace ginar {

// Malformed user input: unparseable files, bad flags, bad spec strings.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A model or experiment configuration that violates a structural
// requirement (e.g. a nonstationary GINAR model).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Singular or otherwise degenerate numerical state.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A matrix pivot fell below the relative singularity threshold.
class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(const std::string& what, std::size_t pivot)
        : NumericalError(what), pivot_(pivot) {}

    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

}  // namespace ginar
