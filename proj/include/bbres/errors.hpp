#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbres {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed expression text; offset is the byte position of the problem.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Structurally invalid input data (problem files, inconsistent declarations).
struct InputError : Error {
    using Error::Error;
};

// A configured resource limit was exceeded (basis computation steps,
// quadrature evaluations, factorization effort).
struct BudgetExceeded : Error {
    using Error::Error;
};

// A mathematical precondition failed (degenerate data, non-isolated zeros,
// division by zero, missing singular point).
struct MathError : Error {
    using Error::Error;
};

// An iterative numeric procedure failed to certify its result.
struct ConvergenceError : Error {
    using Error::Error;
};

} // namespace bbres
