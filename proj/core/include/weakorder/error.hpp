#pragma once

#include <stdexcept>
#include <string>

namespace weakorder {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Zero vector, dependent basis, or another degenerate input.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A frame or subspace violates its structural invariants.
class InvalidFrame : public Error {
 public:
  using Error::Error;
};

/// A subspace is not contained in the span it is being compared against.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

/// Two lattice elements do not share the same reference frame.
class ReferenceMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace weakorder
