#include "lrbt/balancing.hpp"

#include <cmath>

#include "lrbt/adi.hpp"
#include "lrbt/lyapunov.hpp"

namespace lrbt {

namespace {

constexpr double kRankThreshold = 1e-12;

}  // namespace

RVector BalancingSvd::all_values() const {
  RVector out(S1.size() + S2.size());
  out << S1, S2;
  return out;
}

BalancingSvd balancing_svd(const CMatrix& Zq, const CMatrix& E, const CMatrix& Zp,
                           OrderSelection selection) {
  if (Zq.rows() != E.rows() || E.cols() != Zp.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "factor sizes do not match E");
  }
  const CMatrix m = Zq.adjoint() * E * Zp;
  if (m.size() == 0) throw Error(ErrorCode::DimensionMismatch, "empty balancing matrix");
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  const Index q = s.size();

  Index numerical_rank = 0;
  while (numerical_rank < q && s(numerical_rank) > kRankThreshold * s(0)) ++numerical_rank;

  Index r = 0;
  if (selection.order) {
    r = *selection.order;
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  } else {
    const double tau = selection.tolerance;
    if (!(tau > 0.0 && tau < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "relative tolerance must lie in (0, 1)");
    }
    while (r < q && s(r) >= tau * s(0)) ++r;
  }
  if (r > numerical_rank) {
    throw Error(ErrorCode::RankDeficient, "order " + std::to_string(r) +
                                              " exceeds the numerical rank " +
                                              std::to_string(numerical_rank));
  }

  CMatrix u = svd.matrixU().leftCols(r);
  CMatrix v = svd.matrixV().leftCols(r);
  for (Index c = 0; c < r; ++c) {
    Index arg = 0;
    double best = -1.0;
    for (Index i = 0; i < u.rows(); ++i) {
      const double a = std::abs(u(i, c));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    const Complex phase = std::conj(u(arg, c)) / best;
    u.col(c) *= phase;
    v.col(c) *= phase;
    u(arg, c) = Complex(best, 0.0);
  }

  BalancingSvd out;
  out.U1 = std::move(u);
  out.V1 = std::move(v);
  out.S1 = s.head(r);
  out.S2 = s.tail(q - r);
  return out;
}

ProjectionPair balancing_projections(const BalancingSvd& svd, const CMatrix& Zp,
                                     const CMatrix& Zq) {
  const RVector inv_sqrt = svd.S1.array().rsqrt();
  const CMatrix scale = inv_sqrt.cast<Complex>().asDiagonal();
  return ProjectionPair{Zq * svd.U1 * scale, Zp * svd.V1 * scale};
}

DescriptorSystem project_rom(const DescriptorSystem& realization, const BalancingSvd& svd,
                             const CMatrix& Zp, const CMatrix& Zq) {
  check_dimensions(realization);
  if (Zp.rows() != realization.order() || Zq.rows() != realization.order()) {
    throw Error(ErrorCode::DimensionMismatch, "factors do not match the realization order");
  }
  if (svd.U1.rows() != Zq.cols() || svd.V1.rows() != Zp.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "SVD was computed for different factors");
  }
  const auto [w, v] = balancing_projections(svd, Zp, Zq);
  return DescriptorSystem{w.adjoint() * realization.E * v, w.adjoint() * realization.A * v,
                          w.adjoint() * realization.B, realization.C * v};
}

namespace {

struct FullFactors {
  CMatrix zp;
  CMatrix zq;
};

FullFactors gramian_factors(const DescriptorSystem& sys) {
  const auto p = solve_lyapunov(sys, GramianSide::Controllability);
  const auto q = solve_lyapunov(sys, GramianSide::Observability);
  return {cholesky_psd(p.matrix).L, cholesky_psd(q.matrix).L};
}

}  // namespace

BalancedTruncation intrusive_balanced_truncation(const DescriptorSystem& sys,
                                                 OrderSelection selection) {
  const auto checked = validate_system(sys);
  const auto f = gramian_factors(checked);
  const auto svd = balancing_svd(f.zq, checked.E, f.zp, selection);
  return BalancedTruncation{project_rom(checked, svd, f.zp, f.zq), svd.all_values()};
}

RVector hankel_singular_values(const DescriptorSystem& sys) {
  const auto checked = validate_system(sys);
  const auto f = gramian_factors(checked);
  const CMatrix m = f.zq.adjoint() * checked.E * f.zp;
  return Eigen::JacobiSVD<CMatrix>(m).singularValues();
}

RVector hsv_estimates_from_data(const InterimRom& interim, const CMatrix& zp, const CMatrix& zq) {
  const auto& er = interim.realization.E;
  const Index m = interim.inputs;
  const Index p = interim.outputs;
  if (er.rows() != p * zq.rows() || er.cols() != m * zp.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "z factors do not match the interim layout");
  }
  const CMatrix left = expand_kron(zq.conjugate(), p);
  const CMatrix right = expand_kron(zp, m);
  const CMatrix mat = left.adjoint() * er * right;
  return Eigen::JacobiSVD<CMatrix>(mat).singularValues();
}

}  // namespace lrbt
