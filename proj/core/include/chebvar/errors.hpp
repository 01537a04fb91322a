#pragma once

#include <stdexcept>
#include <string>

namespace chebvar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No exact quotient exists over the integers.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A variable tag does not occur in the polynomial's variable pair.
class UnknownVariable : public Error {
 public:
  using Error::Error;
};

/// Two non-constant operands live in different variables.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class NegativeIndex : public Error {
 public:
  using Error::Error;
};

/// Knot parameters violate their invariants (parity, coprimality, range).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A Laurent trace was not invariant under s <-> 1/s.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class OutOfScope : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An identity that holds by construction failed; always an implementation bug.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace chebvar
