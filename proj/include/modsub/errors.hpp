#pragma once

#include <stdexcept>

namespace modsub {

// Caller broke an operation's precondition, or input data is malformed.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal structural guarantee failed (e.g. a division that must be
// exact left a remainder). Indicates a bug, not bad input.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// A sampling request whose target set is provably empty.
struct EmptyTypeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

} // namespace modsub
