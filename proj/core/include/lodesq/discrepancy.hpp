#pragma once

#include <cstddef>
#include <cstdint>

#include "lodesq/point_set.hpp"

namespace lodesq {

/// Default cap on elementary operations for exact star discrepancy.
inline constexpr double kStarBudget = 1e9;

/// Exact star discrepancy sup_y |#{x in [0, y)} / N - vol([0, y))|.
///
/// Enumerates the critical grid prod_i ({x_ni} u {1}); at each grid point the
/// closed count (x <= y) and the open count (x < y) are both tried, which
/// covers both one-sided limits of the box. Cost is N * prod_i |grid_i|;
/// throws BudgetExceeded above `budget`.
double star_discrepancy(const PointSet& points, double budget = kStarBudget);

/// Operation count star_discrepancy() would need for this set.
double star_discrepancy_cost(const PointSet& points);

/// Lower bound on the star discrepancy: the same local expression maximised
/// over every point used as an anchor, the all-ones corner, and `n_anchors`
/// critical-grid points drawn with Rng(seed).
double star_discrepancy_sampled(const PointSet& points, std::size_t n_anchors, std::uint64_t seed);

/// L2 star discrepancy by Warnock's closed form; negative rounding is clamped to zero.
double l2_discrepancy(const PointSet& points);

struct EtkSpec {
  std::size_t cutoff = 1;  ///< M: frequencies with |k|_inf <= M
};

/// Budget on (2M + 1)^d * N for etk_square_sum.
inline constexpr double kEtkBudget = 1e9;

/// sum over k != 0, |k|_inf <= M of |sum_l exp(2 pi i <k, x_l>)|^2 / r(k),
/// r(k) = prod_j max(1, |k_j|).
double etk_square_sum(const PointSet& points, const EtkSpec& spec);

}  // namespace lodesq
