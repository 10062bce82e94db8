#pragma once

#include <stdexcept>
#include <string>

namespace hv {

/// Division by zero, inverse of zero, negative power of zero.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed scalar, polynomial, generator or index literal.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// D1/D2 handed to a map that is only defined on the T/E span.
struct UnsupportedDomainError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Two module specs that cannot be compared or mapped onto each other.
struct IncompatibleSpecError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Index window is not symmetric, misses 0, or yields no constraints.
struct WindowError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Oracle responses do not fit any of the classified module shapes.
struct NotClassifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hv
