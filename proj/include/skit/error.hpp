#pragma once

#include <stdexcept>
#include <string>

namespace skit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition of an operation does not hold for the given arguments.
struct DomainError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct ArithmeticOverflow : Error {
  using Error::Error;
};

// Operation not defined for this kind of family spec.
struct UnsupportedSpec : Error {
  using Error::Error;
};

struct NotFound : Error {
  using Error::Error;
};

// Exhaustive enumeration or materialization would exceed a configured bound.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A construction produced an object violating its own invariant.
struct InvariantError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace skit
