#pragma once

// Error taxonomy for the cvergo core library.
//
// Every precondition violation maps to one of the exception types below so
// callers (and the CLI) can distinguish "bad input" from "state outside the
// physical domain" without string matching.

#include <stdexcept>
#include <string>

namespace cvergo {

/// Input parameters violate a constructor or operation precondition.
class InvalidParamsError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Covariance matrix violates the uncertainty relation (nu_minus < 1) or has
/// a non-positive / complex symplectic spectrum.
class NonPhysicalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Matrix passed as a symplectic transformation does not preserve the
/// symplectic form within tolerance.
class NotSymplecticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Standard-form reduction hit a vanishing diagonal block (cannot occur for
/// physical states; guards divisions).
class DegenerateBlockError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scalar argument outside the mathematical domain of a special function.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Ratio quantities (REG and its bounds) are undefined because the global
/// passive energy vanishes (globally pure state).
class DegeneratePurityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Photon subtraction from the vacuum: the projector trace vanishes.
class SubtractionFromVacuumError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A finite spectrum has more entries than provided energy levels.
class InsufficientLevelsError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A grid search found no point satisfying its region constraint.
class EmptyRegionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cvergo
