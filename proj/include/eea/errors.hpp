#pragma once

#include <stdexcept>
#include <string>

namespace eea {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two operands live in different fields (or an operand in the wrong field).
struct FieldMismatchError : Error {
  using Error::Error;
};

// Vector/matrix sizes do not line up.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// Bad argument values: invalid permutation, zero rescaling, m < 1, ...
struct DomainError : Error {
  using Error::Error;
};

// A configurable cap (enumeration size, coefficient bit length, group
// closure, rejection attempts) was exceeded.  Never silent truncation.
struct ResourceLimitError : Error {
  using Error::Error;
};

// A query could not be decided with the available precision/caps,
// e.g. spectral Cheeger bounds straddling a threshold.
struct InconclusiveError : Error {
  using Error::Error;
};

// Numerical failure: asymmetric input to the symmetric solver,
// eigensolver non-convergence.
struct NumericError : Error {
  using Error::Error;
};

// Malformed input files or JSON.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace eea
