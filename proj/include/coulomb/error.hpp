#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter pair outside the region an operation is proven for, or an
// argument violating a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: series truncation not reached, pole hit, degenerate
// zero, monotonicity violation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace coulomb
