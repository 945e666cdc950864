#pragma once

#include <stdexcept>
#include <string>

namespace prmhull {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the range where a closed form is stated.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
/// Signals a bug in the library, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace prmhull
