#pragma once

#include <stdexcept>
#include <string>

namespace lieelem {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or degrees of the operands do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural precondition (skew-symmetry, degree pattern, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A cycle list repeats an index or leaves 1..n.
class InvalidCycleError : public Error {
 public:
  using Error::Error;
};

/// Conjugation was requested by something other than a single group element.
class UnsupportedUnitError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured size bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Textual or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two weight entries contradict each other under the symmetry convention.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// Exact division had a nonzero remainder.
class InexactDivisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieelem
