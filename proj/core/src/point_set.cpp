#include "lodesq/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "lodesq/errors.hpp"

namespace lodesq {

DegenerateSet::DegenerateSet(std::size_t first, std::size_t second, std::size_t dim)
    : DegenerateCoordinate([&] {
        std::ostringstream msg;
        msg << "degenerate point set: points " << first << " and " << second
            << " share coordinate " << dim;
        return msg.str();
      }()),
      first_(first),
      second_(second),
      dim_(dim) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

double wrap(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("wrap: non-finite coordinate");
  const double r = x - std::floor(x);
  // Tiny negative inputs round up to exactly 1.
  return r >= 1.0 ? 0.0 : r;
}

PointSet::PointSet(std::size_t n_points, std::size_t dim, std::vector<double> coords)
    : n_(n_points), d_(dim), coords_(std::move(coords)) {
  if (n_ == 0 || d_ == 0) throw InvalidArgument("point set needs N >= 1 and d >= 1");
  if (coords_.size() != n_ * d_) throw InvalidArgument("coordinate table does not have N*d entries");
  for (double c : coords_) {
    if (!(c >= 0.0 && c < 1.0)) throw InvalidArgument("coordinate outside [0, 1)");
  }
}

PointSet PointSet::wrapped(std::size_t n_points, std::size_t dim, std::vector<double> coords) {
  for (double& c : coords) c = wrap(c);
  return PointSet(n_points, dim, std::move(coords));
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InvalidArgument("point set needs at least one row");
  const std::size_t d = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw InvalidArgument("ragged rows");
    coords.insert(coords.end(), r.begin(), r.end());
  }
  return PointSet(rows.size(), d, std::move(coords));
}

double torus_distance(double a, double b) {
  const double diff = std::abs(a - b);
  return std::min(diff, 1.0 - diff);
}

std::vector<Coincidence> find_coincidences(const PointSet& points, double eps) {
  std::vector<Coincidence> found;
  const std::size_t n = points.n_points();
  if (n < 2) return found;

  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < points.dim(); ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points(a, k) < points(b, k); });
    auto check = [&](std::size_t a, std::size_t b) {
      const double gap = torus_distance(points(a, k), points(b, k));
      if (gap < eps) found.push_back({std::min(a, b), std::max(a, b), k, gap});
    };
    for (std::size_t i = 0; i + 1 < n; ++i) check(order[i], order[i + 1]);
    if (n > 2) check(order[n - 1], order[0]);
  }
  return found;
}

bool is_degenerate(const PointSet& points, double eps) {
  return !find_coincidences(points, eps).empty();
}

void require_non_degenerate(const PointSet& points, double eps) {
  const auto found = find_coincidences(points, eps);
  if (!found.empty()) throw DegenerateSet(found.front().first, found.front().second, found.front().dim);
}

double max_displacement(const PointSet& from, const PointSet& to) {
  if (from.n_points() != to.n_points() || from.dim() != to.dim())
    throw InvalidArgument("max_displacement: shape mismatch");
  double worst = 0.0;
  const auto a = from.coords();
  const auto b = to.coords();
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, torus_distance(a[i], b[i]));
  return worst;
}

}  // namespace lodesq
