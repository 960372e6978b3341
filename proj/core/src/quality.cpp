#include "lodesq/quality.hpp"

#include "lodesq/discrepancy.hpp"
#include "lodesq/energy.hpp"

namespace lodesq {

double star_discrepancy_auto(const PointSet& points, bool& sampled, std::size_t anchors,
                             std::uint64_t seed) {
  sampled = star_discrepancy_cost(points) > kStarBudget;
  return sampled ? star_discrepancy_sampled(points, anchors, seed) : star_discrepancy(points);
}

QualityReport assess_quality(const PointSet& points, const QualityOptions& options) {
  QualityReport report;
  report.n_points = points.n_points();
  report.dim = points.dim();
  report.energy = energy(points);
  report.star_disc = star_discrepancy_auto(points, report.star_disc_sampled,
                                           options.sampled_anchors, options.sampled_seed);
  report.l2_disc = l2_discrepancy(points);
  report.etk_square_sum =
      etk_square_sum(points, EtkSpec{options.etk_cutoff.value_or(points.n_points())});
  return report;
}

}  // namespace lodesq
