#include "lrbt/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace lrbt {

namespace {

constexpr double kPoleRcond = 1e-14;
constexpr double kSingularERcond = 1e-12;

std::string shape(const CMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

std::string point_str(Complex s) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << s.real() << (s.imag() < 0 ? "" : "+") << s.imag() << "j)";
  return os.str();
}

Eigen::PartialPivLU<CMatrix> factor_resolvent(const DescriptorSystem& sys, Complex s) {
  CMatrix pencil = s * sys.E - sys.A;
  Eigen::PartialPivLU<CMatrix> lu(pencil);
  const double rc = lu.rcond();
  if (!(rc >= kPoleRcond)) {
    throw Error(ErrorCode::PoleHit,
                "sE - A is numerically singular at s = " + point_str(s) + " (rcond " +
                    sci(rc) + ")");
  }
  return lu;
}

}  // namespace

void check_dimensions(const DescriptorSystem& sys) {
  const Index n = sys.A.rows();
  if (n == 0 || sys.A.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "A must be square and nonempty, got " + shape(sys.A));
  }
  if (sys.E.rows() != n || sys.E.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "E must be " + shape(sys.A) + ", got " + shape(sys.E));
  }
  if (sys.B.rows() != n || sys.B.cols() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "B must have " + std::to_string(n) + " rows, got " + shape(sys.B));
  }
  if (sys.C.cols() != n || sys.C.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "C must have " + std::to_string(n) + " columns, got " + shape(sys.C));
  }
}

DescriptorSystem validate_system(DescriptorSystem sys) {
  check_dimensions(sys);
  if (!sys.E.allFinite() || !sys.A.allFinite() || !sys.B.allFinite() || !sys.C.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "system matrices contain non-finite entries");
  }
  Eigen::PartialPivLU<CMatrix> lu(sys.E);
  const double rc = lu.rcond();
  if (!(rc >= kSingularERcond)) {
    throw Error(ErrorCode::SingularE,
                "E is singular or too ill-conditioned (rcond " + sci(rc) + ")");
  }
  return sys;
}

CMatrix eval_transfer(const DescriptorSystem& sys, Complex s) {
  const auto lu = factor_resolvent(sys, s);
  return sys.C * lu.solve(sys.B);
}

CMatrix eval_transfer_derivative(const DescriptorSystem& sys, Complex s) {
  const auto lu = factor_resolvent(sys, s);
  const CMatrix x = lu.solve(sys.B);
  const CMatrix y = lu.solve(sys.E * x);
  return -(sys.C * y);
}

PoleSpectrum poles(const DescriptorSystem& sys) {
  check_dimensions(sys);
  Eigen::PartialPivLU<CMatrix> lu(sys.E);
  if (!(lu.rcond() >= kSingularERcond)) {
    throw Error(ErrorCode::SingularE, "pole computation requires nonsingular E");
  }
  const CMatrix m = lu.solve(sys.A);
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigFailure, "QR iteration did not converge");
  }
  PoleSpectrum out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.values.begin(), out.values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

bool is_stable(const DescriptorSystem& sys, double margin) {
  const auto spec = poles(sys);
  return std::all_of(spec.values.begin(), spec.values.end(),
                     [margin](Complex z) { return z.real() < -margin; });
}

DescriptorSystem random_stable_system(Index n, Index m, Index p, std::uint64_t seed) {
  if (n < 1 || m < 1 || p < 1) {
    throw Error(ErrorCode::InvalidArgument, "n, m, p must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> re_part(-2.0, -0.1);
  std::uniform_real_distribution<double> im_part(0.1, 2.0);
  std::bernoulli_distribution pair_coin(0.5);

  const auto random_real = [&](Index r, Index c) {
    Eigen::MatrixXd out(r, c);
    for (Index j = 0; j < c; ++j)
      for (Index i = 0; i < r; ++i) out(i, j) = unit(rng);
    return out;
  };

  for (int attempt = 0; attempt < 100; ++attempt) {
    // Real block-diagonal spectrum: 1x1 real poles and 2x2 rotation blocks for pairs.
    Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(n, n);
    for (Index i = 0; i < n;) {
      const double re = re_part(rng);
      if (i + 1 < n && pair_coin(rng)) {
        const double im = im_part(rng);
        lambda(i, i) = re;
        lambda(i + 1, i + 1) = re;
        lambda(i, i + 1) = im;
        lambda(i + 1, i) = -im;
        i += 2;
      } else {
        lambda(i, i) = re;
        i += 1;
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_real(n, n));
    const Eigen::MatrixXd t = qr.householderQ();
    const Eigen::MatrixXd a = t * lambda * t.transpose();

    Eigen::MatrixXd e;
    for (int tries = 0;; ++tries) {
      e = Eigen::MatrixXd::Identity(n, n) + 0.1 * random_real(n, n);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
      const auto& sv = svd.singularValues();
      if (sv(n - 1) > 0.0 && sv(0) / sv(n - 1) < 100.0) break;
      if (tries >= 100) {
        throw Error(ErrorCode::GenerationFailure, "could not draw a well-conditioned E");
      }
    }
    DescriptorSystem sys{e.cast<Complex>(), a.cast<Complex>(), random_real(n, m).cast<Complex>(),
                         random_real(p, n).cast<Complex>()};
    if (is_stable(sys, 1e-6)) return sys;
  }
  throw Error(ErrorCode::GenerationFailure, "no stable draw after 100 attempts");
}

}  // namespace lrbt
