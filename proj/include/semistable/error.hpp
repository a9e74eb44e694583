#pragma once

#include <stdexcept>
#include <string>

namespace semistable {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad degree, non-prime ell, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A state that valid inputs can never reach. Seeing one means a bug or a
// forged datum.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class NonMonicPolynomial : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonIntegralSymmetricFunction : public InternalConsistencyError {
 public:
  using InternalConsistencyError::InternalConsistencyError;
};

class RootFindingFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

class WeightOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class LemmaViolation : public InternalConsistencyError {
 public:
  using InternalConsistencyError::InternalConsistencyError;
};

class CorpusTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

class EllEqualsEll0 : public DomainError {
 public:
  using DomainError::DomainError;
};

class WEven : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace semistable
