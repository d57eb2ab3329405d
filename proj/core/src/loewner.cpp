#include "lrbt/loewner.hpp"

#include <sstream>

namespace lrbt {

TangentialRom build_tangential_loewner(const TangentialData& data) {
  const Index r = static_cast<Index>(data.right.size());
  if (r == 0 || static_cast<Index>(data.left.size()) != r) {
    throw Error(ErrorCode::ShapeMismatch, "left and right data must have the same nonzero count");
  }
  const Index m = data.right.front().direction.size();
  const Index p = data.left.front().direction.size();
  for (const auto& rd : data.right) {
    if (rd.direction.size() != m || rd.value.size() != p) {
      throw Error(ErrorCode::DimensionMismatch, "inconsistent right tangential data");
    }
  }
  for (const auto& ld : data.left) {
    if (ld.direction.size() != p || ld.value.size() != m) {
      throw Error(ErrorCode::DimensionMismatch, "inconsistent left tangential data");
    }
  }
  for (Index a = 0; a < r; ++a)
    for (Index b = 0; b < a; ++b) {
      if (same_point(data.right[a].sigma, data.right[b].sigma)) {
        throw Error(ErrorCode::DuplicatePoint, "repeated right point");
      }
      if (same_point(data.left[a].mu, data.left[b].mu)) {
        throw Error(ErrorCode::DuplicatePoint, "repeated left point");
      }
    }

  TangentialRom out;
  auto& sys = out.system;
  sys.E.resize(r, r);
  sys.A.resize(r, r);
  sys.B.resize(r, m);
  sys.C.resize(p, r);
  for (Index i = 0; i < r; ++i) {
    const auto& ld = data.left[i];
    sys.B.row(i) = ld.value;
    for (Index j = 0; j < r; ++j) {
      const auto& rd = data.right[j];
      const Complex c_g_sigma_b = ld.direction * rd.value;  // c_i G(sigma_j) b_j
      const Complex c_g_mu_b = ld.value * rd.direction;     // c_i G(mu_i) b_j
      if (same_point(rd.sigma, ld.mu)) {
        const auto it = data.hermite.find({i, j});
        if (it == data.hermite.end()) {
          std::ostringstream os;
          os << "no derivative datum for coincident pair (" << i << ", " << j << ") at "
             << rd.sigma;
          throw Error(ErrorCode::MissingHermiteData, os.str());
        }
        sys.E(i, j) = -it->second;
        sys.A(i, j) = -(c_g_sigma_b + rd.sigma * it->second);
      } else {
        const Complex d = rd.sigma - ld.mu;
        sys.E(i, j) = -(c_g_sigma_b - c_g_mu_b) / d;
        sys.A(i, j) = -(rd.sigma * c_g_sigma_b - ld.mu * c_g_mu_b) / d;
      }
    }
  }
  for (Index j = 0; j < r; ++j) sys.C.col(j) = data.right[j].value;

  for (const auto& rd : data.right) {
    Eigen::PartialPivLU<CMatrix> lu(rd.sigma * sys.E - sys.A);
    if (!(lu.rcond() >= 1e-14)) out.singular_pencil = true;
  }
  return out;
}

std::vector<Complex> InterimRom::right_points() const {
  std::vector<Complex> out;
  for (Complex a : alphas) out.push_back(-a);
  return out;
}

std::vector<Complex> InterimRom::left_points() const {
  std::vector<Complex> out;
  for (Complex b : betas) out.push_back(-b);
  return out;
}

InterimRom build_block_loewner(const SampleDataset& ds, const ShiftSet& shifts) {
  const Index m = shifts.inputs();
  const Index p = shifts.outputs();
  const Index k = shifts.k();
  const Index l = shifts.l();
  if (ds.inputs() != m || ds.outputs() != p) {
    throw Error(ErrorCode::ShapeMismatch, "dataset is " + std::to_string(ds.outputs()) + "x" +
                                              std::to_string(ds.inputs()) +
                                              " but shifts target " + std::to_string(p) + "x" +
                                              std::to_string(m));
  }
  if (k * m != l * p) throw Error(ErrorCode::ShapeMismatch, "k*m must equal l*p");

  InterimRom rom;
  rom.alphas = shifts.alphas();
  rom.betas = shifts.betas();
  rom.inputs = m;
  rom.outputs = p;

  // Samples at the mirror points, looked up once.
  std::vector<CMatrix> g_alpha(k), g_beta(l);
  for (Index j = 0; j < k; ++j) g_alpha[j] = dataset_lookup(ds, -rom.alphas[j]).value;
  for (Index i = 0; i < l; ++i) g_beta[i] = dataset_lookup(ds, -rom.betas[i]).value;

  const Index r = k * m;
  auto& sys = rom.realization;
  sys.E.resize(r, r);
  sys.A.resize(r, r);
  sys.B.resize(r, m);
  sys.C.resize(p, r);

  for (Index i = 0; i < l; ++i) {
    const Complex beta = rom.betas[i];
    for (Index j = 0; j < k; ++j) {
      const Complex alpha = rom.alphas[j];
      const bool coincident = same_point(-alpha, -beta);
      const CMatrix* deriv = nullptr;
      if (coincident) {
        deriv = &*dataset_lookup(ds, -alpha, /*need_derivative=*/true).derivative;
      } else if (std::abs(alpha - beta) < 1e-8 * (1.0 + std::abs(alpha))) {
        std::ostringstream os;
        os << "alpha[" << j << "] and beta[" << i
           << "] are nearly coincident; Loewner entries are ill-conditioned";
        rom.warnings.push_back(os.str());
      }
      for (Index o = 0; o < p; ++o) {
        for (Index q = 0; q < m; ++q) {
          const Index row = o * l + i;
          const Index col = q * k + j;
          const Complex ga = g_alpha[j](o, q);
          if (coincident) {
            const Complex dg = (*deriv)(o, q);
            sys.E(row, col) = -dg;
            sys.A(row, col) = alpha * dg - ga;
          } else {
            const Complex gb = g_beta[i](o, q);
            sys.E(row, col) = (ga - gb) / (alpha - beta);
            sys.A(row, col) = -(alpha * ga - beta * gb) / (alpha - beta);
          }
        }
      }
    }
  }
  for (Index o = 0; o < p; ++o)
    for (Index i = 0; i < l; ++i) sys.B.row(o * l + i) = g_beta[i].row(o);
  for (Index q = 0; q < m; ++q)
    for (Index j = 0; j < k; ++j) sys.C.col(q * k + j) = g_alpha[j].col(q);
  return rom;
}

std::vector<InterpolationResidual> interpolation_residuals(const DescriptorSystem& rom,
                                                           const SampleDataset& ds,
                                                           std::span<const Complex> points) {
  std::vector<InterpolationResidual> out;
  out.reserve(points.size());
  for (Complex s : points) {
    const CMatrix& data = dataset_lookup(ds, s).value;
    InterpolationResidual res{s, std::nullopt};
    try {
      const CMatrix g = eval_transfer(rom, s);
      const double denom = data.norm();
      const double diff = (g - data).norm();
      res.relative_error = denom > 0.0 ? diff / denom : diff;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleHit) throw;
    }
    out.push_back(res);
  }
  return out;
}

}  // namespace lrbt
