#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument is outside the operation's domain (bad n, r, k, set out of range...).
struct ParameterError : Error {
    using Error::Error;
};

// A stated structural precondition does not hold (graph not full, witness not
// verified, G not a subgraph of the shadow...). The message names the offender.
struct PreconditionError : Error {
    using Error::Error;
};

// Input text could not be parsed. `line` is 1-based; 0 means "not line-specific".
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

// A hypothesis an operation was asked to verify turned out false
// (e.g. a sub-edge codegree differs from the required value).
struct HypothesisViolated : Error {
    using Error::Error;
};

// The minimal->linear repair ran out of fresh vertices. Expected at desk
// scale where the host is smaller than the guarantees assume.
struct RepairFailed : Error {
    using Error::Error;
};

// A step that is guaranteed to succeed failed; signals an implementation bug.
struct InternalError : Error {
    using Error::Error;
};

namespace detail {
[[noreturn]] inline void internal_fail(const char* expr, const char* file, int line) {
    throw InternalError(std::string("internal invariant failed: ") + expr + " at " +
                        file + ":" + std::to_string(line));
}
}  // namespace detail

}  // namespace turan

// Invariant check that must hold whenever the caller met the documented
// preconditions; failure means a bug, not bad input.
#define TURAN_ENSURE(expr) \
    ((expr) ? (void)0 : ::turan::detail::internal_fail(#expr, __FILE__, __LINE__))
