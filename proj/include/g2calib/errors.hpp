#pragma once

#include <stdexcept>

namespace g2calib {

/// Input that failed to parse (CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an operation's precondition (CLI exit code 3).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A structural identity that must hold failed to hold.  Always surfaced,
/// never patched over (CLI exit code 3).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace g2calib
