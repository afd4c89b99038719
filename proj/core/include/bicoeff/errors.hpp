#pragma once

#include <stdexcept>

namespace bicoeff {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series arithmetic on operands with different truncation orders.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

// Composition with an inner series whose constant term is nonzero.
class CompositionDomainError : public Error {
 public:
  using Error::Error;
};

// Reversion of a series that is not of the form z + c2 z^2 + ...
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Coefficient data outside the feasible region it is required to lie in.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

// A numeric or structural argument outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed command line or flag syntax (reserved for the CLI layer).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicoeff
