#include "lrbt/pipeline.hpp"

#include <cmath>
#include <string>

namespace lrbt {

SamplingPlan required_samples(const ShiftSet& shifts) {
  SamplingPlan plan;
  for (Complex a : shifts.alphas()) plan.points.push_back(-a);
  for (Complex b : shifts.betas()) {
    const Complex s = -b;
    bool shared = false;
    for (Complex a : shifts.alphas()) shared = shared || same_point(-a, s);
    if (shared) {
      plan.derivative_points.push_back(s);
    } else {
      plan.points.push_back(s);
    }
  }
  return plan;
}

Reduction reduce_adi_intrusive(const DescriptorSystem& sys, const ShiftSet& shifts,
                               OrderSelection selection) {
  const auto checked = validate_system(sys);
  const auto f = intrusive_lowrank_factors(checked, shifts);
  const CMatrix& zp = f.controllability.Z;
  const CMatrix& zq = f.observability.Z;
  auto svd = balancing_svd(zq, checked.E, zp, selection);
  auto rom = project_rom(checked, svd, zp, zq);
  return Reduction{std::move(rom), std::move(svd)};
}

Reduction reduce_interim(const InterimRom& interim, OrderSelection selection) {
  const CMatrix zp = expand_kron(small_cholesky(interim.alphas).L, interim.inputs);
  const CMatrix zq = expand_kron(small_cholesky(interim.betas).L.conjugate(), interim.outputs);
  auto svd = balancing_svd(zq, interim.realization.E, zp, selection);
  auto rom = project_rom(interim.realization, svd, zp, zq);
  return Reduction{std::move(rom), std::move(svd)};
}

Reduction reduce_data_driven(const SampleDataset& ds, const ShiftSet& shifts,
                             OrderSelection selection) {
  return reduce_interim(build_block_loewner(ds, shifts), selection);
}

GridSpec parse_grid(std::string_view text) {
  const auto fail = [&] {
    return Error(ErrorCode::InvalidArgument,
                 "grid spec '" + std::string(text) + "' is not of the form log:LO:HI:N");
  };
  if (text.substr(0, 4) != "log:") throw fail();
  std::string rest(text.substr(4));
  const auto c1 = rest.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : rest.find(':', c1 + 1);
  if (c2 == std::string::npos) throw fail();
  GridSpec spec;
  try {
    std::size_t used = 0;
    const std::string lo = rest.substr(0, c1);
    const std::string hi = rest.substr(c1 + 1, c2 - c1 - 1);
    const std::string n = rest.substr(c2 + 1);
    spec.lo = std::stod(lo, &used);
    if (used != lo.size()) throw fail();
    spec.hi = std::stod(hi, &used);
    if (used != hi.size()) throw fail();
    spec.count = std::stoi(n, &used);
    if (used != n.size()) throw fail();
  } catch (const std::logic_error&) {
    throw fail();
  }
  if (!(spec.lo > 0.0) || !(spec.hi >= spec.lo) || spec.count < 1 || !std::isfinite(spec.hi)) {
    throw fail();
  }
  return spec;
}

std::vector<Complex> grid_points(const GridSpec& spec) {
  std::vector<Complex> out;
  out.reserve(spec.count);
  const double a = std::log10(spec.lo);
  const double b = std::log10(spec.hi);
  for (int i = 0; i < spec.count; ++i) {
    const double t = spec.count == 1 ? 0.0 : static_cast<double>(i) / (spec.count - 1);
    out.emplace_back(0.0, std::pow(10.0, a + t * (b - a)));
  }
  return out;
}

namespace {

std::optional<RVector> try_hsv(const DescriptorSystem& sys) {
  try {
    return hankel_singular_values(sys);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

ComparisonReport compare_roms(const DescriptorSystem& a, const DescriptorSystem& b,
                              std::span<const Complex> grid) {
  check_dimensions(a);
  check_dimensions(b);
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
    throw Error(ErrorCode::DimensionMismatch, "models have different input/output counts");
  }
  ComparisonReport report;
  report.grid.assign(grid.begin(), grid.end());
  for (Complex s : grid) {
    std::optional<double> dev;
    try {
      const CMatrix ga = eval_transfer(a, s);
      const CMatrix gb = eval_transfer(b, s);
      const double ref = gb.norm();
      const double diff = (ga - gb).norm();
      dev = ref > 0.0 ? diff / ref : diff;
      report.max_deviation = std::max(report.max_deviation, *dev);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleHit) throw;
    }
    report.deviation.push_back(dev);
  }
  report.hsv_a = try_hsv(a);
  report.hsv_b = try_hsv(b);
  return report;
}

}  // namespace lrbt
