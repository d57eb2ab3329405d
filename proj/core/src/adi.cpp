#include "lrbt/adi.hpp"

#include <sstream>

namespace lrbt {

namespace {

void check_side(std::span<const Complex> shifts, const char* name) {
  if (shifts.empty()) {
    throw Error(ErrorCode::InvalidArgument, std::string("no ") + name + " shifts given");
  }
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (!(shifts[i].real() < 0.0)) {
      std::ostringstream os;
      os << name << "[" << i << "] = " << shifts[i] << " is not in the open left half plane";
      throw Error(ErrorCode::NonNegativeRealPart, os.str());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (same_point(shifts[j], shifts[i])) {
        std::ostringstream os;
        os << name << " shift " << shifts[i] << " is repeated";
        throw Error(ErrorCode::RepeatedShift, os.str());
      }
    }
  }
}

}  // namespace

ShiftSet validate_shifts(std::vector<Complex> alphas, std::vector<Complex> betas, Index m,
                         Index p) {
  if (m < 1 || p < 1) throw Error(ErrorCode::InvalidArgument, "m and p must be positive");
  check_side(alphas, "alpha");
  check_side(betas, "beta");
  const Index km = static_cast<Index>(alphas.size()) * m;
  const Index lp = static_cast<Index>(betas.size()) * p;
  if (km != lp) {
    throw Error(ErrorCode::ShapeMismatch, "k*m = " + std::to_string(km) + " differs from l*p = " +
                                              std::to_string(lp));
  }
  return ShiftSet(std::move(alphas), std::move(betas), m, p);
}

CMatrix pick_inverse_gramian(std::span<const Complex> shifts) {
  check_side(shifts, "shift");
  const Index k = static_cast<Index>(shifts.size());
  CMatrix x(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) x(i, j) = 1.0 / (-std::conj(shifts[i]) - shifts[j]);
  return x;
}

CholeskyFactor small_cholesky(std::span<const Complex> shifts) {
  const CMatrix x = pick_inverse_gramian(shifts);
  const Index k = x.rows();

  Eigen::SelfAdjointEigenSolver<CMatrix> es(x, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  if (!(ev(0) > 0.0) || ev(k - 1) / ev(0) > 1e14) {
    throw Error(ErrorCode::IllConditionedPick,
                "Pick matrix condition " + sci(ev(k - 1) / ev(0)) +
                    " exceeds 1e14 (shifts too clustered)");
  }

  Eigen::LLT<CMatrix> llt(x);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::IllConditionedPick, "Pick matrix is not numerically positive definite");
  }
  // X^{-1} = L^{-*} L^{-1}
  const CMatrix l_inv =
      llt.matrixL().solve(CMatrix::Identity(k, k));
  CMatrix pr = l_inv.adjoint() * l_inv;
  pr = 0.5 * (pr + pr.adjoint());

  Eigen::LLT<CMatrix> llt_pr(pr);
  if (llt_pr.info() != Eigen::Success) {
    throw Error(ErrorCode::IllConditionedPick, "inverse Pick matrix lost definiteness");
  }
  CholeskyFactor z;
  z.L = llt_pr.matrixL();
  z.pivots.resize(k);
  for (Index i = 0; i < k; ++i) z.pivots[i] = i;
  return z;
}

CMatrix expand_kron(const CMatrix& z, Index d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "block count must be >= 1");
  CMatrix out = CMatrix::Zero(d * z.rows(), d * z.cols());
  for (Index b = 0; b < d; ++b) out.block(b * z.rows(), b * z.cols(), z.rows(), z.cols()) = z;
  return out;
}

CMatrix adi_right_basis(const DescriptorSystem& sys, std::span<const Complex> alphas) {
  check_dimensions(sys);
  const Index n = sys.order();
  const Index k = static_cast<Index>(alphas.size());
  const Index m = sys.inputs();
  CMatrix v(n, k * m);
  for (Index j = 0; j < k; ++j) {
    const Complex s = -alphas[j];
    Eigen::PartialPivLU<CMatrix> lu(s * sys.E - sys.A);
    if (!(lu.rcond() >= 1e-14)) {
      std::ostringstream os;
      os << "mirror point " << s << " of alpha[" << j << "] is a pole";
      throw Error(ErrorCode::PoleHit, os.str());
    }
    const CMatrix x = lu.solve(sys.B);
    for (Index in = 0; in < m; ++in) v.col(in * k + j) = x.col(in);
  }
  return v;
}

CMatrix adi_left_basis(const DescriptorSystem& sys, std::span<const Complex> betas) {
  check_dimensions(sys);
  const Index n = sys.order();
  const Index l = static_cast<Index>(betas.size());
  const Index p = sys.outputs();
  CMatrix w(n, l * p);
  for (Index i = 0; i < l; ++i) {
    const Complex s = -betas[i];
    Eigen::PartialPivLU<CMatrix> lu((s * sys.E - sys.A).transpose());
    if (!(lu.rcond() >= 1e-14)) {
      std::ostringstream os;
      os << "mirror point " << s << " of beta[" << i << "] is a pole";
      throw Error(ErrorCode::PoleHit, os.str());
    }
    // Row block C (sE - A)^{-1}; its adjoint gives the columns.
    const CMatrix y = lu.solve(sys.C.transpose()).transpose();  // p x n
    for (Index out = 0; out < p; ++out) w.col(out * l + i) = y.row(out).adjoint();
  }
  return w;
}

AdiFactors intrusive_lowrank_factors(const DescriptorSystem& sys, const ShiftSet& shifts) {
  check_dimensions(sys);
  if (sys.inputs() != shifts.inputs() || sys.outputs() != shifts.outputs()) {
    throw Error(ErrorCode::DimensionMismatch, "shift set was validated for a different (m, p)");
  }
  const CMatrix v = adi_right_basis(sys, shifts.alphas());
  const CMatrix w = adi_left_basis(sys, shifts.betas());
  const CMatrix zp = small_cholesky(shifts.alphas()).L;
  const CMatrix zq = small_cholesky(shifts.betas()).L;
  return AdiFactors{
      LowRankFactor{v * expand_kron(zp, sys.inputs()), GramianSide::Controllability},
      LowRankFactor{w * expand_kron(zq.conjugate(), sys.outputs()), GramianSide::Observability}};
}

}  // namespace lrbt
