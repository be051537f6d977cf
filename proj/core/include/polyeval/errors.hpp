#pragma once

#include <stdexcept>
#include <string>

namespace polyeval {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN or infinite input at an API boundary, empty coefficient list, bad
/// plan parameters and similar contract violations.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Goertzel recurrence requested for a polynomial of degree < 2.
class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

/// PEMA plan whose padded degree is below the polynomial degree.
class PlanMismatch : public Error {
 public:
  using Error::Error;
};

/// Chebyshev argument outside [-1, 1].
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroPoint : public Error {
 public:
  using Error::Error;
};

class ZeroImaginary : public Error {
 public:
  using Error::Error;
};

class ZeroReference : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyeval
