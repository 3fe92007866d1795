#pragma once

#include <stdexcept>
#include <string>

namespace clusterdenom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix is not skew-symmetrizable, has a bad shape, or has an invalid symmetrizer.
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

/// An enumeration ran past its node or time budget. Never a mathematical verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A Laurent division left a remainder. In the cluster engine this means a bug.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (index range, rank, arc kind...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed; the message names the invariant.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterdenom
