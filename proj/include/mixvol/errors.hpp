#pragma once

#include <stdexcept>
#include <string>

namespace mixvol {

/// Shape or dimension disagreement between operands.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (negative scale, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A theorem hypothesis was not met (non-PD matrix, non doubly-stochastic, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Body kind / dimension combination the library does not handle.
struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace mixvol
