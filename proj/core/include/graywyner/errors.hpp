#pragma once

#include <stdexcept>
#include <string>

namespace graywyner {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value type was constructed with arguments that violate its invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation was called outside the domain where its formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonPositiveDeterminant : public Error {
 public:
  using Error::Error;
};

// The auxiliary covariance is singular and the cross block does not lie in
// its range, so conditioning on W is ill-defined.
class SingularAuxiliary : public Error {
 public:
  using Error::Error;
};

// The covariance of (X,Y) given W has a non-positive determinant.
class DegenerateConditional : public Error {
 public:
  using Error::Error;
};

// An operation that only applies to one branch of the rate formula was called
// for an operating point in a different branch.
class RegimeError : public Error {
 public:
  using Error::Error;
};

class PsdViolation : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace graywyner
