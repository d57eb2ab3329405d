#ifndef LRBT_COMMON_HPP
#define LRBT_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace lrbt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorCode {
  // input / contract violations
  DimensionMismatch,
  SingularE,
  InvalidArgument,
  DuplicatePoint,
  MissingSample,
  MissingDerivative,
  AmbiguousMatch,
  ParseError,
  IoError,
  MissingHermiteData,
  ShapeMismatch,
  NonNegativeRealPart,
  RepeatedShift,
  // numerical failures
  PoleHit,
  EigFailure,
  GenerationFailure,
  UnstablePencil,
  SolveFailure,
  PoleOnAxis,
  NotPSD,
  IllConditionedPick,
  RankDeficient,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes caused by numerics rather than malformed input.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Tolerance used everywhere two complex sample points are considered equal.
inline bool same_point(Complex a, Complex b) noexcept {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a));
}

// %.3e rendering for diagnostics.
std::string sci(double v);

}  // namespace lrbt

#endif  // LRBT_COMMON_HPP
