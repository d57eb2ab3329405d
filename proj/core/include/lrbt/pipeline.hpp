#ifndef LRBT_PIPELINE_HPP
#define LRBT_PIPELINE_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lrbt/adi.hpp"
#include "lrbt/balancing.hpp"
#include "lrbt/loewner.hpp"
#include "lrbt/model.hpp"
#include "lrbt/sampling.hpp"

namespace lrbt {

/// Where the transfer function has to be sampled for a given shift set.
struct SamplingPlan {
  std::vector<Complex> points;             // -alpha_j, then -beta_i not already present
  std::vector<Complex> derivative_points;  // mirrors shared by both shift sides
};

SamplingPlan required_samples(const ShiftSet& shifts);

struct Reduction {
  DescriptorSystem rom;
  BalancingSvd svd;
};

/// ADI low-rank balanced truncation with access to the realization.
Reduction reduce_adi_intrusive(const DescriptorSystem& sys, const ShiftSet& shifts,
                               OrderSelection selection = {});

/// Balanced square-root reduction of an interim Loewner model using the
/// shift-only factors I_m (x) z_p and I_p (x) conj(z_q).
Reduction reduce_interim(const InterimRom& interim, OrderSelection selection = {});

/// Non-intrusive ADI low-rank balanced truncation: samples and shifts in,
/// reduced model out. No realization of the original model is involved.
Reduction reduce_data_driven(const SampleDataset& ds, const ShiftSet& shifts,
                             OrderSelection selection = {});

/// Logarithmic frequency grid j*omega, omega from lo to hi inclusive.
struct GridSpec {
  double lo = 1e-3;
  double hi = 1e3;
  int count = 100;
};

/// Parses "log:LO:HI:N". Throws InvalidArgument.
GridSpec parse_grid(std::string_view text);
std::vector<Complex> grid_points(const GridSpec& spec);

struct ComparisonReport {
  std::vector<Complex> grid;
  /// |G_a - G_b|_F / |G_b|_F per point; empty where either model has a pole.
  std::vector<std::optional<double>> deviation;
  double max_deviation = 0.0;
  /// Empty when the model is not asymptotically stable.
  std::optional<RVector> hsv_a;
  std::optional<RVector> hsv_b;
};

ComparisonReport compare_roms(const DescriptorSystem& a, const DescriptorSystem& b,
                              std::span<const Complex> grid);

}  // namespace lrbt

#endif  // LRBT_PIPELINE_HPP
