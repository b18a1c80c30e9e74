#pragma once

#include <stdexcept>
#include <string>

namespace superorbit {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands live in different rings / algebras / shapes.
struct SignatureMismatch : Error {
    using Error::Error;
};

/// A parity precondition was violated (odd where even expected, etc.).
struct ParityError : Error {
    using Error::Error;
};

/// Element has no inverse in the ring (body not a nonzero constant,
/// singular body block, ...).
struct NotInvertible : Error {
    using Error::Error;
};

/// Orbit machinery preconditions: repeated eigenvalues.
struct NonRegular : Error {
    using Error::Error;
};

/// Body spectrum does not match the orbit data.
struct NotInOrbit : Error {
    using Error::Error;
};

/// Computation would leave exact rational arithmetic (irrational
/// eigenvectors, non-constant body, ...).
struct UnsupportedField : Error {
    using Error::Error;
};

/// Input degree exceeds a configured cutoff.
struct DegreeOverflow : Error {
    using Error::Error;
};

/// Graded-slice dimensions disagree; the regular-sequence assumption
/// behind slice-wise reduction is violated.
struct InconsistentSlices : Error {
    using Error::Error;
};

/// Text input rejected by the expression grammar.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), column(col_) {}
};

} // namespace superorbit
