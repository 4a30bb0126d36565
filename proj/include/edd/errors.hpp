#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edd {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Attempted to invert something that is not a unit of the ring
// (non-constant polynomial, integer other than +-1, jet with zero
// constant term, matrix with non-unit determinant).
struct NotAUnitError : Error {
    using Error::Error;
};

// Jets with different expansion points or truncation orders were combined.
struct ContextMismatchError : Error {
    using Error::Error;
};

// A decision about a vanishing order could not be certified within the
// truncation order of the jets involved.
struct InsufficientTruncationError : Error {
    using Error::Error;
};

// A right-hand side that is not in the relevant column span.
struct SpanError : Error {
    using Error::Error;
};

// Violated precondition or out-of-range argument.
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace edd
