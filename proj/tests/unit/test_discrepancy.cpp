#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "lodesq/discrepancy.hpp"
#include "lodesq/energy.hpp"
#include "lodesq/errors.hpp"
#include "lodesq/generators.hpp"
#include "lodesq/parallel.hpp"
#include "lodesq/quality.hpp"
#include "lodesq/rng.hpp"

using namespace lodesq;
using doctest::Approx;

namespace {

// Scans every anchored box with corners on a 1/g grid, open and closed.
// Lower bound on D*, within d/g of it.
double grid_scan(const PointSet& p, std::size_t g) {
  const std::size_t d = p.dim();
  const double n = static_cast<double>(p.n_points());
  double best = 0.0;
  std::vector<std::size_t> idx(d, 1);
  for (;;) {
    double vol = 1.0;
    for (std::size_t k = 0; k < d; ++k) vol *= static_cast<double>(idx[k]) / g;
    std::size_t open = 0, closed = 0;
    for (std::size_t m = 0; m < p.n_points(); ++m) {
      bool in_open = true, in_closed = true;
      for (std::size_t k = 0; k < d; ++k) {
        const double y = static_cast<double>(idx[k]) / g;
        in_open &= p(m, k) < y;
        in_closed &= p(m, k) <= y;
      }
      open += in_open;
      closed += in_closed;
    }
    best = std::max({best, vol - open / n, closed / n - vol});
    std::size_t k = 0;
    while (k < d && idx[k] == g) idx[k++] = 1;
    if (k == d) break;
    ++idx[k];
  }
  return best;
}

// random points on the 1/32 grid so the scan is exact at g = 2048
PointSet grid_points(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> c(n * d);
  for (auto& v : c) v = static_cast<double>(rng.below(32)) / 32.0;
  return PointSet(n, d, c);
}

}  // namespace

TEST_CASE("star discrepancy fixtures") {
  CHECK(star_discrepancy(PointSet(1, 1, {0.5})) == Approx(0.5));
  CHECK(star_discrepancy(PointSet(4, 1, {0.125, 0.375, 0.625, 0.875})) == Approx(0.125));
  CHECK(star_discrepancy(PointSet(1, 2, {0.0, 0.0})) == Approx(1.0));
  const std::vector<std::uint32_t> b23{2, 3};
  CHECK(star_discrepancy(halton(128, b23, 1)) == Approx(0.032).epsilon(0.07));
}

TEST_CASE("star discrepancy agrees with a grid scan") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t d = 1 + seed % 2;
    const std::size_t n = 1 + seed % 16;
    const auto generic = random_points(n, d, seed);
    const double exact = star_discrepancy(generic);
    const double scan = grid_scan(generic, d == 1 ? 2048 : 256);
    CHECK(scan <= exact + 1e-12);
    CHECK(exact - scan <= d / (d == 1 ? 2048.0 : 256.0) + 1e-12);

    // coordinates on the grid: the scan is exact, ties included
    const auto tied = grid_points(n, d, seed);
    CHECK(star_discrepancy(tied) == Approx(grid_scan(tied, 32)).epsilon(1e-12));
  }
}

TEST_CASE("star discrepancy budget and sampling") {
  const auto p = random_points(200, 3, 2);
  CHECK(star_discrepancy_cost(p) > 1e6);
  CHECK_THROWS_AS(star_discrepancy(p, 1e3), BudgetExceeded);

  CHECK(star_discrepancy_sampled(PointSet(1, 1, {0.5}), 10, 1) == Approx(0.5));
  const auto q = random_points(40, 2, 6);
  const double exact = star_discrepancy(q);
  const double sampled = star_discrepancy_sampled(q, 5000, 3);
  CHECK(sampled <= exact + 1e-12);
  CHECK(sampled >= 0.8 * exact);

  bool was_sampled = true;
  CHECK(star_discrepancy_auto(q, was_sampled) == exact);
  CHECK_FALSE(was_sampled);
}

TEST_CASE("star discrepancy is thread independent") {
  const auto p = random_points(60, 2, 8);
  set_worker_count(1);
  const double a = star_discrepancy(p);
  set_worker_count(3);
  const double b = star_discrepancy(p);
  set_worker_count(1);
  CHECK(a == b);
}

TEST_CASE("warnock L2") {
  CHECK(l2_discrepancy(PointSet(1, 1, {0.0})) == Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
  CHECK(l2_discrepancy(PointSet(1, 1, {0.5})) == Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-12));

  // midpoint oracle for the integral of the squared local discrepancy, d = 2
  const std::vector<std::uint32_t> b25{2, 5};
  const auto h = halton(64, b25, 1);
  const std::size_t g = 512;
  double sum = 0.0;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const double y0 = (i + 0.5) / g, y1 = (j + 0.5) / g;
      std::size_t count = 0;
      for (std::size_t m = 0; m < 64; ++m) count += (h(m, 0) < y0 && h(m, 1) < y1);
      const double local = count / 64.0 - y0 * y1;
      sum += local * local;
    }
  CHECK(l2_discrepancy(h) == Approx(std::sqrt(sum / (g * g))).epsilon(1e-3));
}

TEST_CASE("ETK square sum") {
  CHECK(etk_square_sum(PointSet(1, 1, {0.3}), EtkSpec{2}) == Approx(3.0));
  std::vector<double> eq(12);
  for (std::size_t i = 0; i < 12; ++i) eq[i] = i / 12.0;
  CHECK(etk_square_sum(PointSet(12, 1, eq), EtkSpec{12}) == Approx(24.0).epsilon(1e-10));
  CHECK_THROWS_AS(etk_square_sum(random_points(10, 6, 1), EtkSpec{100}), BudgetExceeded);
}

TEST_CASE("quality report") {
  const auto p = random_points(30, 2, 1);
  QualityOptions opt;
  opt.etk_cutoff = 8;
  const auto q = assess_quality(p, opt);
  CHECK(q.n_points == 30);
  CHECK(q.energy == energy(p));
  CHECK(q.star_disc == star_discrepancy(p));
  CHECK(q.l2_disc == l2_discrepancy(p));
  CHECK(q.etk_square_sum == etk_square_sum(p, EtkSpec{8}));
}
