#pragma once

#include <stdexcept>

namespace hyppow {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported domain (e.g. x = 1, |x| > 1, bad control
/// settings, mismatched table).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator or special-function argument sits at (or within rounding
/// distance of) a pole. The message names the offending parameter or index.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series hit its term cap with the tail estimate still above tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A coefficient table is too small for the requested evaluation. Raised
/// eagerly, before any partial result could be mistaken for a converged one.
class TableSizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyppow
