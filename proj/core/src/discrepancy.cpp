#include "lodesq/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "fourier.hpp"
#include "lodesq/errors.hpp"
#include "lodesq/parallel.hpp"
#include "lodesq/rng.hpp"

namespace lodesq {
namespace {

// Per-dimension critical grid (sorted distinct coordinates followed by 1.0)
// and, for every point, the grid index of each of its coordinates.
struct CriticalGrid {
  std::vector<std::vector<double>> values;
  std::vector<std::uint32_t> rank;  // rank[n * d + k]
};

CriticalGrid build_grid(const PointSet& points) {
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  CriticalGrid grid;
  grid.values.resize(d);
  grid.rank.resize(n_points * d);
  for (std::size_t k = 0; k < d; ++k) {
    auto& g = grid.values[k];
    g.reserve(n_points + 1);
    for (std::size_t n = 0; n < n_points; ++n) g.push_back(points(n, k));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    g.push_back(1.0);
    for (std::size_t n = 0; n < n_points; ++n) {
      const auto it = std::lower_bound(g.begin(), g.end(), points(n, k));
      grid.rank[n * d + k] = static_cast<std::uint32_t>(it - g.begin());
    }
  }
  return grid;
}

// max(closed / N - vol, vol - open / N) at the grid point with indices `at`.
double local_discrepancy(const CriticalGrid& grid, std::size_t n_points,
                         const std::vector<std::uint32_t>& at) {
  const std::size_t d = at.size();
  double volume = 1.0;
  for (std::size_t k = 0; k < d; ++k) volume *= grid.values[k][at[k]];
  std::size_t closed = 0;
  std::size_t open = 0;
  for (std::size_t n = 0; n < n_points; ++n) {
    const std::uint32_t* r = &grid.rank[n * d];
    bool inside_closed = true;
    bool inside_open = true;
    for (std::size_t k = 0; k < d && inside_closed; ++k) {
      inside_closed = r[k] <= at[k];
      inside_open = inside_open && r[k] < at[k];
    }
    closed += inside_closed;
    open += inside_closed && inside_open;
  }
  const double inv = 1.0 / static_cast<double>(n_points);
  return std::max(static_cast<double>(closed) * inv - volume,
                  volume - static_cast<double>(open) * inv);
}

}  // namespace

double star_discrepancy_cost(const PointSet& points) {
  double cost = static_cast<double>(points.n_points());
  for (std::size_t k = 0; k < points.dim(); ++k) {
    std::vector<double> column(points.n_points());
    for (std::size_t n = 0; n < points.n_points(); ++n) column[n] = points(n, k);
    std::sort(column.begin(), column.end());
    const auto distinct = std::unique(column.begin(), column.end()) - column.begin();
    cost *= static_cast<double>(distinct + 1);
  }
  return cost;
}

double star_discrepancy(const PointSet& points, double budget) {
  if (star_discrepancy_cost(points) > budget) {
    throw BudgetExceeded(
        "star_discrepancy: exact enumeration exceeds the operation budget; "
        "use star_discrepancy_sampled for a lower bound");
  }
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  const CriticalGrid grid = build_grid(points);
  const std::size_t first_side = grid.values[0].size();

  std::vector<double> slab_max(first_side, 0.0);
  parallel_for(first_side, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> at(d, 0);
    for (std::size_t j0 = begin; j0 < end; ++j0) {
      std::fill(at.begin(), at.end(), 0u);
      at[0] = static_cast<std::uint32_t>(j0);
      double best = 0.0;
      while (true) {
        best = std::max(best, local_discrepancy(grid, n_points, at));
        std::size_t k = d;
        bool done = true;
        while (k > 1) {
          --k;
          if (at[k] + 1 < grid.values[k].size()) {
            ++at[k];
            done = false;
            break;
          }
          at[k] = 0;
        }
        if (done) break;
      }
      slab_max[j0] = best;
    }
  });
  return *std::max_element(slab_max.begin(), slab_max.end());
}

double star_discrepancy_sampled(const PointSet& points, std::size_t n_anchors, std::uint64_t seed) {
  if (n_anchors < 1) throw InvalidArgument("star_discrepancy_sampled: need at least one anchor");
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  const CriticalGrid grid = build_grid(points);

  std::vector<std::uint32_t> at(d);
  double best = 0.0;
  for (std::size_t n = 0; n < n_points; ++n) {
    std::copy_n(&grid.rank[n * d], d, at.begin());
    best = std::max(best, local_discrepancy(grid, n_points, at));
  }
  for (std::size_t k = 0; k < d; ++k) at[k] = static_cast<std::uint32_t>(grid.values[k].size() - 1);
  best = std::max(best, local_discrepancy(grid, n_points, at));

  Rng rng(seed);
  for (std::size_t a = 0; a < n_anchors; ++a) {
    for (std::size_t k = 0; k < d; ++k)
      at[k] = static_cast<std::uint32_t>(rng.below(grid.values[k].size()));
    best = std::max(best, local_discrepancy(grid, n_points, at));
  }
  return best;
}

double l2_discrepancy(const PointSet& points) {
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  const double n = static_cast<double>(n_points);

  double single = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    double prod = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double x = points(i, k);
      prod *= (1.0 - x * x) / 2.0;
    }
    single += prod;
  }

  std::vector<double> row(n_points, 0.0);
  parallel_for(n_points, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n_points; ++j) {
        double prod = 1.0;
        for (std::size_t k = 0; k < d; ++k) prod *= 1.0 - std::max(points(i, k), points(j, k));
        acc += prod;
      }
      row[i] = acc;
    }
  });
  double pair = 0.0;
  for (double r : row) pair += r;

  const double squared =
      std::pow(3.0, -static_cast<double>(d)) - 2.0 / n * single + pair / (n * n);
  return std::sqrt(std::max(squared, 0.0));
}

double etk_square_sum(const PointSet& points, const EtkSpec& spec) {
  if (spec.cutoff < 1) throw InvalidArgument("etk_square_sum: cutoff must be >= 1");
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  const std::size_t side = 2 * spec.cutoff + 1;
  if (std::pow(static_cast<double>(side), static_cast<double>(d)) * static_cast<double>(n_points) >
      kEtkBudget) {
    throw BudgetExceeded("etk_square_sum: (2M+1)^d * N exceeds the evaluation budget");
  }

  const detail::PhaseTable phases(points, spec.cutoff);
  double total = 0.0;
  detail::for_each_half_frequency(d, spec.cutoff, [&](std::span<const long> k) {
    double r = 1.0;
    for (long v : k) r *= static_cast<double>(std::max(1L, std::labs(v)));
    total += 2.0 * std::norm(phases.exponential_sum(k)) / r;
  });
  return total;
}

}  // namespace lodesq
