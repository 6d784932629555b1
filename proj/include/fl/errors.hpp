#pragma once

#include <stdexcept>
#include <string>

namespace fl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad argument: word over the wrong alphabet, mismatched alphabets,
/// unknown state, precondition on the input value violated.
struct InputError : Error {
    using Error::Error;
};

/// The machine or grammar has the wrong shape for the operation
/// (nondeterministic where deterministic is required, non-CNF grammar,
/// epsilon transitions where forbidden).
struct StructureError : Error {
    using Error::Error;
};

/// Text could not be parsed. `position` is a 0-based offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A value violates one of its documented invariants.
struct ValidationError : Error {
    using Error::Error;
};

/// A search or enumeration exceeded its resource budget before reaching
/// a verdict. Distinct from a negative answer.
struct ResourceError : Error {
    using Error::Error;
};

/// A deterministic run failed to settle within its epsilon-move cap.
struct DivergenceError : Error {
    using Error::Error;
};

}  // namespace fl
