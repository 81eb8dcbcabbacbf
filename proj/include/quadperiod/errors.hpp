#pragma once

#include <stdexcept>
#include <string>

namespace qp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input expression.
struct SyntaxError : Error {
  using Error::Error;
};

// Input outside the supported domain (e.g. sqrt of a perfect square).
struct DomainError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// An interval operation could not certify the result; retry at higher
// precision.
struct PrecisionLoss : Error {
  using Error::Error;
};

// An interval straddles a decision boundary (integer cell, sign); retry at
// higher precision.
struct InsufficientPrecision : Error {
  using Error::Error;
};

struct SquareDiscriminant : Error {
  using Error::Error;
};

struct NonPositiveDiscriminant : Error {
  using Error::Error;
};

// D not congruent to 0 or 1 mod 4, or otherwise not a discriminant.
struct InvalidDiscriminant : Error {
  using Error::Error;
};

struct WrongDegree : Error {
  using Error::Error;
};

// Polynomial fails the two-irrational-real-roots membership test.
struct NotInFd : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

// A set-equality audit found a counterexample; message carries it.
struct AuditFailure : Error {
  using Error::Error;
};

}  // namespace qp
