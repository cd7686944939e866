#pragma once

#include <stdexcept>
#include <string>

namespace mldeg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two polynomials (or a polynomial and an operation) disagree on the variable set.
struct VariableMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Data vector violates preconditions (zero entry, zero sum, wrong length).
struct BadDataError : Error {
    using Error::Error;
};

// A configured resource cap (basis size, reductions, coefficient bits, wall
// clock) was exceeded.  Computations abort with this error instead of
// truncating silently.
struct ResourceLimitError : Error {
    using Error::Error;
};

// An operation requiring a zero-dimensional ideal received one with an
// infinite staircase.
struct NotZeroDimensionalError : Error {
    using Error::Error;
};

// Two independent random data draws produced different counts.
struct GenericityError : Error {
    using Error::Error;
};

// Numeric point recovery failed (non-separating form after retries,
// residuals above tolerance).
struct SolveError : Error {
    using Error::Error;
};

} // namespace mldeg
