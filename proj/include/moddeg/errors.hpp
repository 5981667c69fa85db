#pragma once

#include <stdexcept>
#include <string>

namespace moddeg {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Weierstrass model with zero discriminant.
class SingularCurveError : public DomainError {
 public:
  explicit SingularCurveError(const std::string& what = "singular curve")
      : DomainError(what) {}
};

/// A standing hypothesis of a certification (e.g. N2 >= 142) is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Prime of bad reduction passed where a good prime is required.
class BadReductionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative numerical routine failed to meet its tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moddeg
