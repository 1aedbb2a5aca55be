#pragma once

#include <stdexcept>
#include <string>

namespace hybridwig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A dyadic state is missing the conjugate-transpose partner of some term,
/// or a Wigner value came out with a non-negligible imaginary part.
class HermiticityViolation : public Error {
 public:
  using Error::Error;
};

/// The quadrature refinement loop exhausted its node budget.
class QuadratureNonConvergence : public Error {
 public:
  using Error::Error;
};

/// A truncated number basis is too small for the requested operator/state.
class CutoffInsufficient : public Error {
 public:
  using Error::Error;
};

/// A matrix handed to a density-matrix routine is not Hermitian, unit-trace
/// and positive semidefinite.
class NotDensityMatrix : public Error {
 public:
  using Error::Error;
};

/// An oracle cross-check disagreed with the fast path beyond tolerance.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hybridwig
