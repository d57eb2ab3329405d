#ifndef LRBT_LOEWNER_HPP
#define LRBT_LOEWNER_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrbt/adi.hpp"
#include "lrbt/common.hpp"
#include "lrbt/model.hpp"
#include "lrbt/sampling.hpp"

namespace lrbt {

/// Right tangential datum: G(sigma) b = value.
struct RightTangential {
  Complex sigma;
  CVector direction;  // b, length m
  CVector value;      // G(sigma) b, length p
};

/// Left tangential datum: c G(mu) = value.
struct LeftTangential {
  Complex mu;
  CRowVector direction;  // c, length p
  CRowVector value;      // c G(mu), length m
};

struct TangentialData {
  std::vector<RightTangential> right;
  std::vector<LeftTangential> left;
  /// c_i G'(sigma_j) b_j for every (left index i, right index j) with mu_i == sigma_j.
  std::map<std::pair<Index, Index>, Complex> hermite;
};

struct TangentialRom {
  DescriptorSystem system;
  /// Set when sigma_j E_r - A_r is numerically singular at some right point.
  bool singular_pencil = false;
};

/// Loewner / shifted Loewner realization of tangential data:
///   E_r(i,j) = -(c_i G(sigma_j) b_j - c_i G(mu_i) b_j) / (sigma_j - mu_i)
///   A_r(i,j) = -(sigma_j c_i G(sigma_j) b_j - mu_i c_i G(mu_i) b_j) / (sigma_j - mu_i)
///   B_r(i,:) = c_i G(mu_i),  C_r(:,j) = G(sigma_j) b_j
/// with E_r = -h, A_r = -(c_i G(sigma_j) b_j + sigma_j h) where mu_i == sigma_j.
TangentialRom build_tangential_loewner(const TangentialData& data);

/// Row/column layout of an InterimRom: row (o*l + i) belongs to output o and
/// beta_i, column (q*k + j) to input q and alpha_j.
inline constexpr const char* kInterimOrdering = "output-major/input-major, shift-minor";

/// Block Loewner interpolant of order k m = l p built from samples only.
struct InterimRom {
  DescriptorSystem realization;
  std::vector<Complex> alphas;
  std::vector<Complex> betas;
  Index inputs = 0;   // m
  Index outputs = 0;  // p
  std::vector<std::string> warnings;

  std::vector<Complex> right_points() const;  // -alpha_j
  std::vector<Complex> left_points() const;   // -beta_i
};

/// Fills E_r, A_r, B_r, C_r entrywise from G(-alpha_j), G(-beta_i) and, at
/// coincident mirrors, G'(-alpha_j). Throws MissingSample / MissingDerivative
/// from dataset_lookup and ShapeMismatch if the dataset's (p, m) disagree
/// with the shift set.
InterimRom build_block_loewner(const SampleDataset& ds, const ShiftSet& shifts);

struct InterpolationResidual {
  Complex s;
  /// |G_rom(s) - G_data(s)|_F / |G_data(s)|_F; empty if s is a pole of the ROM.
  std::optional<double> relative_error;
};

std::vector<InterpolationResidual> interpolation_residuals(const DescriptorSystem& rom,
                                                           const SampleDataset& ds,
                                                           std::span<const Complex> points);

}  // namespace lrbt

#endif  // LRBT_LOEWNER_HPP
