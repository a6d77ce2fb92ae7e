#pragma once

#include <stdexcept>
#include <string>

namespace zloop {

// Base class for all library errors. Subclasses map 1:1 onto the CLI exit
// codes: domain/input errors -> 2, convergence guards -> 3, numerical
// failures -> 4.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// --- input / domain errors (exit code 2) ---

class DomainError : public Error {
  public:
    using Error::Error;
};

class NotHyperbolic : public DomainError {
  public:
    using DomainError::DomainError;
};

class InvalidKilling : public DomainError {
  public:
    using DomainError::DomainError;
};

class Uncertified : public DomainError {
  public:
    using DomainError::DomainError;
};

class ExplosionGuard : public DomainError {
  public:
    using DomainError::DomainError;
};

// --- convergence guards (exit code 3) ---

class ConvergenceGuard : public Error {
  public:
    using Error::Error;
};

// --- numerical failures (exit code 4) ---

class NumericalError : public Error {
  public:
    using Error::Error;
};

class QuadratureFailure : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class BranchError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class ContractionError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class NoRoot : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

} // namespace zloop
