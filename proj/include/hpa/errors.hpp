#pragma once

#include <stdexcept>
#include <string>

namespace hpa {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input errors (the CLI maps these to exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};
class ShapeError : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public ShapeError {
 public:
  using ShapeError::ShapeError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};
class SingularMatrix : public Error {
 public:
  using Error::Error;
};
class InvalidGroup : public Error {
 public:
  using Error::Error;
};
class BadCharacteristic : public Error {
 public:
  using Error::Error;
};
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};
class NonUnitalAlgebra : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class NotRightIdeal : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class NotUnitOnA : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class SeedNotSubalgebra : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class NonCentralIdempotent : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};
class AssociativityFailure : public Error {
 public:
  using Error::Error;
};

/// A computed certificate or a required structural verification failed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hpa
