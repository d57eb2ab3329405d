#include "lrbt/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lrbt/gauss_legendre.hpp"

namespace lrbt {

namespace {

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

/// Solves a X + X a^* + f = 0 for upper-triangularizable a with spectrum in
/// the open left half plane. Complex Schur form, then column back-substitution.
CMatrix bartels_stewart(const CMatrix& a, const CMatrix& f) {
  const Index n = a.rows();
  Eigen::ComplexSchur<CMatrix> schur(a);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::SolveFailure, "Schur decomposition did not converge");
  }
  const CMatrix& t = schur.matrixT();
  const CMatrix& u = schur.matrixU();

  const double scale = std::max(1.0, t.norm());
  for (Index i = 0; i < n; ++i) {
    if (t(i, i).real() >= -1e-14 * scale) {
      throw Error(ErrorCode::UnstablePencil, "pencil has an eigenvalue with nonnegative real part");
    }
  }

  const CMatrix fh = u.adjoint() * f * u;
  CMatrix x = CMatrix::Zero(n, n);
  // Column j of T X + X T^* = -F couples to columns k > j through conj(T(j, k)).
  for (Index j = n - 1; j >= 0; --j) {
    CVector rhs = -fh.col(j);
    for (Index k = j + 1; k < n; ++k) rhs -= std::conj(t(j, k)) * x.col(k);
    CMatrix shifted = t;
    shifted.diagonal().array() += std::conj(t(j, j));
    x.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return hermitian_part(u * x * u.adjoint());
}

void check_lyapunov_inputs(const CMatrix& A, const CMatrix& E, const CMatrix& F,
                           GramianSide side) {
  const Index n = A.rows();
  if (A.cols() != n || E.rows() != n || E.cols() != n || n == 0) {
    throw Error(ErrorCode::DimensionMismatch, "A and E must be square of equal size");
  }
  if (side == GramianSide::Controllability ? F.rows() != n : F.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand factor does not match the state size");
  }
}

}  // namespace

Gramian solve_lyapunov(const CMatrix& A, const CMatrix& E, const CMatrix& F, GramianSide side) {
  check_lyapunov_inputs(A, E, F, side);
  Eigen::PartialPivLU<CMatrix> lu(E);
  if (!(lu.rcond() >= 1e-12)) {
    throw Error(ErrorCode::SingularE, "Lyapunov solve requires nonsingular E");
  }
  const CMatrix a_tilde = lu.solve(A);

  Gramian g{CMatrix(), side};
  CMatrix ff;
  if (side == GramianSide::Controllability) {
    const CMatrix b_tilde = lu.solve(F);
    g.matrix = bartels_stewart(a_tilde, b_tilde * b_tilde.adjoint());
    ff = F * F.adjoint();
  } else {
    // Y = E^* Q E solves a~^* Y + Y a~ + C^* C = 0.
    ff = F.adjoint() * F;
    const CMatrix y = bartels_stewart(a_tilde.adjoint(), ff);
    const auto lu_h = Eigen::PartialPivLU<CMatrix>(E.adjoint());
    const CMatrix t = lu_h.solve(y);                              // E^{-*} Y
    g.matrix = hermitian_part(lu_h.solve(t.adjoint()).adjoint());  // E^{-*} Y E^{-1}
  }

  const CMatrix r = side == GramianSide::Controllability
                        ? CMatrix(A * g.matrix * E.adjoint() + E * g.matrix * A.adjoint() + ff)
                        : CMatrix(A.adjoint() * g.matrix * E + E.adjoint() * g.matrix * A + ff);
  const double bound = 1e-8 * (A.norm() * g.matrix.norm() * E.norm() + ff.norm());
  if (!(r.norm() <= bound)) {
    throw Error(ErrorCode::SolveFailure,
                "Lyapunov residual " + sci(r.norm()) + " exceeds bound");
  }
  return g;
}

Gramian solve_lyapunov(const DescriptorSystem& sys, GramianSide side) {
  return solve_lyapunov(sys.A, sys.E,
                        side == GramianSide::Controllability ? sys.B : sys.C, side);
}

double lyapunov_residual(const DescriptorSystem& sys, const CMatrix& X, GramianSide side) {
  const auto& A = sys.A;
  const auto& E = sys.E;
  if (side == GramianSide::Controllability) {
    return (A * X * E.adjoint() + E * X * A.adjoint() + sys.B * sys.B.adjoint()).norm();
  }
  return (A.adjoint() * X * E + E.adjoint() * X * A + sys.C.adjoint() * sys.C).norm();
}

Gramian gramian_quadrature(const DescriptorSystem& sys, GramianSide side, int node_count,
                           std::optional<double> frequency_scale) {
  check_dimensions(sys);
  if (node_count < 2) throw Error(ErrorCode::InvalidArgument, "node_count must be >= 2");

  const auto spec = poles(sys);
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (Complex z : spec.values) {
    if (std::abs(z.real()) <= 1e-10 * (1.0 + std::abs(z))) {
      throw Error(ErrorCode::PoleOnAxis, "pole on the imaginary axis");
    }
    if (z.real() > 0.0) throw Error(ErrorCode::UnstablePencil, "right-half-plane pole");
    min_abs = std::min(min_abs, std::abs(z));
    max_abs = std::max(max_abs, std::abs(z));
  }
  const double c = frequency_scale.value_or(std::sqrt(min_abs * max_abs));
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidArgument, "frequency scale must be positive");
  }

  const auto rule = gauss_legendre(node_count);
  const Index n = sys.order();
  CMatrix acc = CMatrix::Zero(n, n);
  const double half_pi = 0.5 * std::numbers::pi;
  for (int i = 0; i < node_count; ++i) {
    const double theta = half_pi * rule.nodes[i];
    const double sec = 1.0 / std::cos(theta);
    const double w = half_pi * rule.weights[i] * c * sec * sec;
    const Complex s(0.0, c * std::tan(theta));
    const CMatrix pencil = s * sys.E - sys.A;
    CMatrix x;
    if (side == GramianSide::Controllability) {
      x = Eigen::PartialPivLU<CMatrix>(pencil).solve(sys.B);
    } else {
      x = Eigen::PartialPivLU<CMatrix>(pencil.adjoint()).solve(sys.C.adjoint());
    }
    acc.noalias() += w * (x * x.adjoint());
  }
  return Gramian{hermitian_part(acc / (2.0 * std::numbers::pi)), side};
}

CholeskyFactor cholesky_psd(const CMatrix& M) {
  const Index n = M.rows();
  if (M.cols() != n || n == 0) {
    throw Error(ErrorCode::DimensionMismatch, "Cholesky needs a nonempty square matrix");
  }
  const double norm = M.norm();
  if ((M - M.adjoint()).norm() > 1e-10 * std::max(norm, 1e-300)) {
    throw Error(ErrorCode::NotPSD, "matrix is not Hermitian");
  }
  const CMatrix h = hermitian_part(M);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double spectral = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  if (ev(0) < -1e-10 * spectral) {
    throw Error(ErrorCode::NotPSD, "eigenvalue " + sci(ev(0)) + " is negative");
  }
  const double trace = h.diagonal().real().sum();
  const double threshold = 1e-12 * trace;

  CholeskyFactor out;
  if (ev(0) > threshold) {
    Eigen::LLT<CMatrix> llt(h);
    if (llt.info() == Eigen::Success) {
      out.L = llt.matrixL();
      out.pivots.resize(n);
      for (Index i = 0; i < n; ++i) out.pivots[i] = i;
      return out;
    }
  }

  // Symmetric-pivoted outer-product Cholesky, stopped at the numerical rank.
  CMatrix work = h;
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  CMatrix l = CMatrix::Zero(n, n);
  Index rank = 0;
  for (; rank < n; ++rank) {
    Index piv = rank;
    double best = work(perm[rank], perm[rank]).real();
    for (Index i = rank + 1; i < n; ++i) {
      const double d = work(perm[i], perm[i]).real();
      if (d > best) {
        best = d;
        piv = i;
      }
    }
    if (!(best > threshold)) break;
    std::swap(perm[rank], perm[piv]);
    const Index pr = perm[rank];
    const double root = std::sqrt(best);
    for (Index i = rank; i < n; ++i) {
      l(perm[i], rank) = work(perm[i], pr) / root;
    }
    for (Index i = rank + 1; i < n; ++i)
      for (Index j = rank + 1; j < n; ++j)
        work(perm[i], perm[j]) -= l(perm[i], rank) * std::conj(l(perm[j], rank));
  }
  out.L = l.leftCols(rank);
  out.pivots = std::move(perm);
  return out;
}

}  // namespace lrbt
