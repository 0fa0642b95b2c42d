#pragma once

#include <stdexcept>

namespace sqtsim {

/// A scalar argument lies outside its physical domain (r < 0, T < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix fails a structural requirement: asymmetry beyond tolerance,
/// nonpositive determinant, or no real symplectic spectrum.
class InvalidMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bath moments violating the Heisenberg constraint |M|^2 <= N(N+1).
class UnphysicalBathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Singular steering-party block in the Schur complement.
class DegenerateStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqtsim
