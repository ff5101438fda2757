#pragma once

#include <stdexcept>
#include <string>

namespace idemgeo {

/// Base class for every error the workbench raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid scalar domain (non-prime modulus, p in {2,3}) or mixed domains.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Raised by inverse() on a singular matrix; distinct from arithmetic faults.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical postcondition failed. Always a bug or a
/// counterexample worth reporting, never an input problem.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace idemgeo
