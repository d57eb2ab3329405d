#ifndef LRBT_SAMPLING_HPP
#define LRBT_SAMPLING_HPP

#include <optional>
#include <span>
#include <vector>

#include "lrbt/common.hpp"
#include "lrbt/model.hpp"

namespace lrbt {

/// One transfer-function sample G(s), optionally with G'(s).
struct SamplePoint {
  Complex s;
  CMatrix value;
  std::optional<CMatrix> derivative;
};

/// Immutable set of p x m samples at pairwise distinct points.
///
/// This is the only description of the original model that the data-driven
/// reduction path is allowed to see. It records no provenance.
class SampleDataset {
 public:
  /// Throws DimensionMismatch when a sample is not p x m and DuplicatePoint
  /// when two points coincide under same_point().
  SampleDataset(Index p, Index m, std::vector<SamplePoint> points);

  Index outputs() const { return p_; }
  Index inputs() const { return m_; }
  const std::vector<SamplePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  Index p_;
  Index m_;
  std::vector<SamplePoint> points_;
};

/// Evaluates G at every point and G' at every derivative point (which must
/// also appear in `points`). Output order follows `points`.
SampleDataset sample_model(const DescriptorSystem& sys, std::span<const Complex> points,
                           std::span<const Complex> derivative_points = {});

/// Finds the stored sample within 1e-12 (1 + |s|) of s.
/// Throws MissingSample, MissingDerivative or AmbiguousMatch.
const SamplePoint& dataset_lookup(const SampleDataset& ds, Complex s, bool need_derivative = false);

}  // namespace lrbt

#endif  // LRBT_SAMPLING_HPP
