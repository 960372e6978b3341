#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lodesq/point_set.hpp"

namespace lodesq {

/// The metrics reported for one point set.
struct QualityReport {
  std::size_t n_points = 0;
  std::size_t dim = 0;
  double energy = 0.0;
  double star_disc = 0.0;
  bool star_disc_sampled = false;  ///< star_disc is a sampled lower bound, not exact
  double l2_disc = 0.0;
  double etk_square_sum = 0.0;
};

struct QualityOptions {
  /// ETK cutoff M; defaults to N.
  std::optional<std::size_t> etk_cutoff;
  /// Anchors for the sampled star discrepancy when the exact one is over budget.
  std::size_t sampled_anchors = 100000;
  std::uint64_t sampled_seed = 0;
};

/// Energy, star discrepancy (exact within budget, sampled otherwise), L2
/// discrepancy and the ETK square sum. Throws DegenerateSet for degenerate
/// sets and BudgetExceeded if the ETK sum is over budget.
QualityReport assess_quality(const PointSet& points, const QualityOptions& options = {});

/// Exact star discrepancy when affordable, otherwise the sampled lower bound.
/// The flag is set when the sampled route was taken.
double star_discrepancy_auto(const PointSet& points, bool& sampled,
                             std::size_t anchors = 100000, std::uint64_t seed = 0);

}  // namespace lodesq
