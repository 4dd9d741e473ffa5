#pragma once

#include <stdexcept>
#include <string>

namespace dhh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Truncated series of different orders were combined.
class OrderMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A parameter makes a quotient form vanish in its denominator.
class SingularParameter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Text did not parse as the expected exact value.
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A memoization table was asked for an index beyond its hard bound.
class CacheBoundExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two routes that must agree did not. Always an implementation bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dhh
