#pragma once

#include <stdexcept>
#include <string>

namespace qepi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix failed one of the density-matrix invariants. `deviation()` is the
/// measured violation (asymmetry norm, most negative eigenvalue, or trace
/// offset).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class NotHermitian : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotPSD : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TraceNotOne : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InfeasibleEntropy : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A functional parameter lies outside the range where concavity is proven.
class OutOfCertifiedRange : public Error {
 public:
  using Error::Error;
};

/// Eigensolver or root-finder did not converge.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class EigenFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BadSigmaSpec : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownFigure : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace qepi
