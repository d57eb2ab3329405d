#include "lrbt/sampling.hpp"

#include <sstream>

namespace lrbt {

namespace {

std::string point_str(Complex s) {
  std::ostringstream os;
  os.precision(17);
  os << s.real() << (s.imag() < 0 ? "" : "+") << s.imag() << "j";
  return os.str();
}

}  // namespace

SampleDataset::SampleDataset(Index p, Index m, std::vector<SamplePoint> points)
    : p_(p), m_(m), points_(std::move(points)) {
  if (p_ < 1 || m_ < 1) {
    throw Error(ErrorCode::DimensionMismatch, "dataset needs p, m >= 1");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& pt = points_[i];
    if (pt.value.rows() != p_ || pt.value.cols() != m_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "sample " + std::to_string(i) + " is not " + std::to_string(p_) + "x" +
                      std::to_string(m_));
    }
    if (pt.derivative && (pt.derivative->rows() != p_ || pt.derivative->cols() != m_)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "derivative of sample " + std::to_string(i) + " has the wrong shape");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (same_point(points_[j].s, pt.s) || same_point(pt.s, points_[j].s)) {
        throw Error(ErrorCode::DuplicatePoint, "point " + point_str(pt.s) + " appears twice");
      }
    }
  }
}

SampleDataset sample_model(const DescriptorSystem& sys, std::span<const Complex> points,
                           std::span<const Complex> derivative_points) {
  check_dimensions(sys);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (same_point(points[j], points[i])) {
        throw Error(ErrorCode::DuplicatePoint, "point " + point_str(points[i]) + " requested twice");
      }
  for (Complex d : derivative_points) {
    bool found = false;
    for (Complex s : points) found = found || same_point(s, d);
    if (!found) {
      throw Error(ErrorCode::InvalidArgument,
                  "derivative point " + point_str(d) + " is not among the sample points");
    }
  }

  std::vector<SamplePoint> out;
  out.reserve(points.size());
  for (Complex s : points) {
    SamplePoint pt;
    pt.s = s;
    try {
      pt.value = eval_transfer(sys, s);
      for (Complex d : derivative_points) {
        if (same_point(s, d)) {
          pt.derivative = eval_transfer_derivative(sys, s);
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleHit) throw;
      throw Error(ErrorCode::PoleHit, "sample point " + point_str(s) + " is a pole of the model");
    }
    out.push_back(std::move(pt));
  }
  return SampleDataset(sys.outputs(), sys.inputs(), std::move(out));
}

const SamplePoint& dataset_lookup(const SampleDataset& ds, Complex s, bool need_derivative) {
  const SamplePoint* hit = nullptr;
  for (const auto& pt : ds.points()) {
    if (!same_point(s, pt.s)) continue;
    if (hit != nullptr) {
      throw Error(ErrorCode::AmbiguousMatch, "several samples match " + point_str(s));
    }
    hit = &pt;
  }
  if (hit == nullptr) {
    throw Error(ErrorCode::MissingSample, "no sample at " + point_str(s));
  }
  if (need_derivative && !hit->derivative) {
    throw Error(ErrorCode::MissingDerivative, "no derivative sample at " + point_str(s));
  }
  return *hit;
}

}  // namespace lrbt
