#ifndef LRBT_ADI_HPP
#define LRBT_ADI_HPP

#include <span>
#include <vector>

#include "lrbt/common.hpp"
#include "lrbt/lyapunov.hpp"
#include "lrbt/model.hpp"

namespace lrbt {

/// Validated ADI shifts: alphas (controllability side, k of them) and betas
/// (observability side, l of them) for a system with m inputs, p outputs.
/// All shifts lie in the open left half plane, no side repeats a shift,
/// and k m = l p. Only validate_shifts() creates one.
class ShiftSet {
 public:
  const std::vector<Complex>& alphas() const { return alphas_; }
  const std::vector<Complex>& betas() const { return betas_; }
  Index k() const { return static_cast<Index>(alphas_.size()); }
  Index l() const { return static_cast<Index>(betas_.size()); }
  Index inputs() const { return m_; }
  Index outputs() const { return p_; }
  /// Common size k m = l p of the interim model.
  Index interim_order() const { return k() * m_; }

 private:
  friend ShiftSet validate_shifts(std::vector<Complex>, std::vector<Complex>, Index, Index);
  ShiftSet(std::vector<Complex> a, std::vector<Complex> b, Index m, Index p)
      : alphas_(std::move(a)), betas_(std::move(b)), m_(m), p_(p) {}

  std::vector<Complex> alphas_;
  std::vector<Complex> betas_;
  Index m_;
  Index p_;
};

ShiftSet validate_shifts(std::vector<Complex> alphas, std::vector<Complex> betas, Index m, Index p);

/// Tall factor Z with Z Z^* approximating a Gramian.
struct LowRankFactor {
  CMatrix Z;
  GramianSide side;
};

/// Closed-form solution X(i,j) = 1 / (-conj(a_i) - a_j) of
/// -S^* X - X S + 1 1^T = 0 with S = diag(-a).
CMatrix pick_inverse_gramian(std::span<const Complex> shifts);

/// Positive-diagonal lower Cholesky factor z of X^{-1}, X = pick_inverse_gramian.
/// Depends on the shifts only. Throws IllConditionedPick when cond(X) > 1e14.
CholeskyFactor small_cholesky(std::span<const Complex> shifts);

/// Block-diagonal I_d (x) z.
CMatrix expand_kron(const CMatrix& z, Index d);

/// Right basis V = [V_1 .. V_m], V_j = [(-a_1 E - A)^{-1} B(:,j) .. (-a_k E - A)^{-1} B(:,j)].
CMatrix adi_right_basis(const DescriptorSystem& sys, std::span<const Complex> alphas);

/// Left basis whose adjoint is W^T, W_i = [(-b_1 E^T - A^T)^{-1} C(i,:)^T ..].
/// Columns are (-conj(b) E^* - A^*)^{-1} C(i,:)^*, output-major then shift-minor,
/// so that left^* E right is the block Loewner matrix for any complex data.
CMatrix adi_left_basis(const DescriptorSystem& sys, std::span<const Complex> betas);

struct AdiFactors {
  LowRankFactor controllability;  // V (I_m (x) z_p)
  LowRankFactor observability;    // left basis (I_p (x) conj(z_q))
};

/// Intrusive low-rank Gramian factors built from the system and the shifts.
/// For real data this is exactly W (I_p (x) z_q); for complex shifts the
/// observability factor uses conj(z_q) to match the dual construction.
AdiFactors intrusive_lowrank_factors(const DescriptorSystem& sys, const ShiftSet& shifts);

}  // namespace lrbt

#endif  // LRBT_ADI_HPP
