#pragma once

// Shared scalar and matrix aliases, tolerance profile and the error hierarchy.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pptes {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

// Relative tolerances used across the library. All thresholds scale with the
// magnitude of the quantity under test unless noted otherwise.
struct ToleranceProfile {
  double rank_tol = 1e-9;    // singular values below rank_tol * sigma_max count as zero
  double psd_tol = 1e-9;     // eigenvalue floor: lambda_min >= -psd_tol * ||m||
  double match_tol = 1e-6;   // invariant tuple matching
  double symbol_tol = 1e-7;  // minimum distance of an invariant from {0, 1}
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wrong shapes or malformed input data.
struct DimensionError : Error {
  using Error::Error;
};

// A matrix fails the state contract (Hermiticity, positivity, trace).
struct InvalidStateError : Error {
  using Error::Error;
};

// Parameters outside their documented domain.
struct InvalidParameterError : Error {
  using Error::Error;
};

// A 3x3 determinant in an invariant denominator is numerically zero.
struct DegenerateQuintupleError : Error {
  using Error::Error;
};

// An invariant expected to be real carries a large imaginary part.
struct NonRealInvariantError : Error {
  using Error::Error;
};

// An invariant sits on the boundary between symbol letters.
struct IndeterminateSymbolError : Error {
  using Error::Error;
};

// A rational map denominator vanishes at the requested point.
struct DenominatorVanishesError : Error {
  using Error::Error;
};

// A quadruple lies outside the box (0,1) x (0,1) x (-inf,0) x (0,1).
struct OutOfBoxError : Error {
  using Error::Error;
};

// The state is not in the class an operation is defined for.
struct UnsupportedClassError : Error {
  using Error::Error;
};

// Closed-form roots disagree with the numerically computed ones.
struct RootMismatchError : Error {
  using Error::Error;
};

// A reconstructed normal form fails the equivalence verification.
struct ReconstructionFailedError : Error {
  using Error::Error;
};

struct NotEntangledError : Error {
  using Error::Error;
};

struct NotPPTError : Error {
  using Error::Error;
};

// A reduction step hit a configuration its normalization cannot handle.
struct DegenerateCombinationError : Error {
  using Error::Error;
};

// A numeric procedure could not classify its input at the working precision.
struct IndeterminateError : Error {
  using Error::Error;
};

}  // namespace pptes
