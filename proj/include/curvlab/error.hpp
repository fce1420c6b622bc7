#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

/// Violated precondition on degrees, dimensions, or shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for the given metric or input class
/// (e.g. a Hodge star on a Lorentzian frame).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input data that contradicts itself (asymmetric Hessian, conflicting
/// tensor components, dependent blades, ...).
class InconsistentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace curvlab
