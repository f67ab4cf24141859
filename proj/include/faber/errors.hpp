#pragma once

#include <stdexcept>
#include <string>

namespace faber {

/// Base class for every error raised by the library.
class FaberError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Airfoil parameters or run configuration violate a precondition.
class ParameterError : public FaberError {
 public:
  using FaberError::FaberError;
};

/// Evaluation at a point where a map or function has no valid value.
class DomainError : public FaberError {
 public:
  using FaberError::FaberError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical failures. The CLI maps all of these to exit code 3.
class NumericalError : public FaberError {
 public:
  using FaberError::FaberError;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ResolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DeficitError : public NumericalError {
 public:
  DeficitError(const std::string& what, int missing)
      : NumericalError(what), missing_(missing) {}
  int missing() const noexcept { return missing_; }

 private:
  int missing_;
};

class BranchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Two zero sets that should coincide do not.
class MismatchError : public FaberError {
 public:
  using FaberError::FaberError;
};

}  // namespace faber
