#pragma once

#include <stdexcept>
#include <string>

namespace gentaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input exceeds a configured enumeration bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A block or position index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Arguments have mismatched degrees, arities or block counts.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// User-supplied data violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input is malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A closed-form result does not apply to the given input.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (for example a coefficient that must be
/// integral is not). Always indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace gentaut
