#pragma once

#include <stdexcept>
#include <string>

namespace joints {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IdenticalLines : public Error {
 public:
  IdenticalLines() : Error("line_line_intersection: identical lines") {}
};

class GenericityFailure : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a guarantee that follows from a theorem is observed to fail.
/// Reaching one of these means the implementation is wrong, not the input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace joints
