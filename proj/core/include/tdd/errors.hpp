#pragma once

#include <stdexcept>
#include <string>

namespace tdd {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix handed to a Hermitian-only routine was not Hermitian.
class NonHermitianError : public Error {
 public:
  using Error::Error;
};

// A density matrix (or candidate) failed the unit-trace check.
class TraceNotOneError : public Error {
 public:
  using Error::Error;
};

// A density matrix (or candidate) had an eigenvalue below tolerance,
// or construction parameters that would produce one.
class NotPositiveError : public Error {
 public:
  using Error::Error;
};

// A scalar argument was outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A specialized routine was invoked on a state outside its class.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// A configuration struct carried a non-positive grid size, tolerance, etc.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

// The compact X-state expression hit a vanishing denominator while the
// numerator stayed finite; the piecewise form must be used instead.
class DegenerateDenominatorError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. a discriminant that is
// non-negative in exact arithmetic came out significantly negative).
class InternalError : public Error {
 public:
  using Error::Error;
};

// Malformed input text (JSON syntax, schema, or number formatting).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdd
