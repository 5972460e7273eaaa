#pragma once

#include <stdexcept>
#include <string>

namespace lrpossib {

/// Bad user input: sample outside the sample space, parameter out of domain,
/// malformed specification.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed region expression (arity mismatch, empty union, ...).
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

/// Operation not available for this model or space (e.g. contour in 3-D).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical failure that cannot be reported as a flagged result
/// (quadrature non-convergence, likelihood divergence).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent hypothesis-testing regime declaration.
class RegimeError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace lrpossib
