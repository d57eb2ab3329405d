#ifndef LRBT_BALANCING_HPP
#define LRBT_BALANCING_HPP

#include <optional>

#include "lrbt/common.hpp"
#include "lrbt/loewner.hpp"
#include "lrbt/model.hpp"

namespace lrbt {

/// Either an explicit reduced order or a relative singular-value cutoff tau
/// (keep every sigma_i >= tau * sigma_1).
struct OrderSelection {
  std::optional<Index> order;
  double tolerance = 1e-8;

  static OrderSelection fixed(Index r) { return {r, 1e-8}; }
  static OrderSelection relative(double tau) { return {std::nullopt, tau}; }
};

/// Partitioned SVD Zq^* E Zp = [U1 U2] diag(S1, S2) [V1 V2]^*.
/// Each column of U1 has its largest-magnitude entry real and positive;
/// V1 carries the same phase, so the factorization is reproducible.
struct BalancingSvd {
  CMatrix U1;
  RVector S1;  // descending
  CMatrix V1;
  RVector S2;  // discarded values, descending

  Index order() const { return S1.size(); }
  RVector all_values() const;
};

BalancingSvd balancing_svd(const CMatrix& Zq, const CMatrix& E, const CMatrix& Zp,
                           OrderSelection selection);

/// Left and right projection bases Zq U1 S1^{-1/2} and Zp V1 S1^{-1/2}.
struct ProjectionPair {
  CMatrix left;
  CMatrix right;
};

ProjectionPair balancing_projections(const BalancingSvd& svd, const CMatrix& Zp, const CMatrix& Zq);

/// Petrov-Galerkin reduction W^* (E, A, B), C V with the balancing projections.
/// The realization may be the full model (factors of size n) or an interim
/// Loewner model (factors of size k m); the reduced E is the identity up to
/// rounding.
DescriptorSystem project_rom(const DescriptorSystem& realization, const BalancingSvd& svd,
                             const CMatrix& Zp, const CMatrix& Zq);

struct BalancedTruncation {
  DescriptorSystem rom;
  RVector hsv;  // all Hankel singular values of the input, descending
};

/// Square-root balanced truncation from dense Gramians. Throws UnstablePencil.
BalancedTruncation intrusive_balanced_truncation(const DescriptorSystem& sys,
                                                 OrderSelection selection);

/// All Hankel singular values, descending.
RVector hankel_singular_values(const DescriptorSystem& sys);

/// Singular values of (I_p (x) z_q)^T E_r (I_m (x) z_p): Hankel singular value
/// estimates computed from samples and shifts alone.
RVector hsv_estimates_from_data(const InterimRom& interim, const CMatrix& zp, const CMatrix& zq);

}  // namespace lrbt

#endif  // LRBT_BALANCING_HPP
