#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lodesq {

/// Default threshold below which two coordinates count as coincident.
inline constexpr double kDefaultMinSeparation = 1e-12;

/// Fractional part x - floor(x), guaranteed to land in [0, 1).
/// Throws InvalidArgument for non-finite input.
double wrap(double x);

/// N points on the d-torus, stored row-major as an N x d table.
///
/// Every coordinate lies in [0, 1). A PointSet is an immutable value; the
/// optimizer and generators build new sets rather than editing in place.
class PointSet {
 public:
  /// Takes ownership of a row-major coordinate table. Throws InvalidArgument
  /// if the shape is inconsistent or any coordinate is outside [0, 1).
  PointSet(std::size_t n_points, std::size_t dim, std::vector<double> coords);

  /// Same as the constructor but wraps every coordinate onto the torus first.
  static PointSet wrapped(std::size_t n_points, std::size_t dim, std::vector<double> coords);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t n_points() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }

  double operator()(std::size_t n, std::size_t k) const { return coords_[n * d_ + k]; }
  std::span<const double> row(std::size_t n) const { return {coords_.data() + n * d_, d_}; }
  std::span<const double> coords() const noexcept { return coords_; }

  bool operator==(const PointSet&) const = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> coords_;
};

/// A pair of points whose coordinates coincide in dimension `dim`.
struct Coincidence {
  std::size_t first;   ///< lower point index
  std::size_t second;  ///< higher point index
  std::size_t dim;
  double gap;          ///< torus distance between the two coordinates
};

/// All adjacent coincidences: within each dimension the coordinates are
/// sorted and every neighbouring pair (including the wrap-around pair) closer
/// than `eps` on the circle is reported.
std::vector<Coincidence> find_coincidences(const PointSet& points, double eps);

/// True iff some m != n and dimension k have |x_mk - x_nk| < eps or
/// 1 - |x_mk - x_nk| < eps.
bool is_degenerate(const PointSet& points, double eps = kDefaultMinSeparation);

/// Throws DegenerateSet naming the first offending pair, if any.
void require_non_degenerate(const PointSet& points, double eps = kDefaultMinSeparation);

/// Circle distance min(|a - b|, 1 - |a - b|) for a, b in [0, 1).
double torus_distance(double a, double b);

/// max over points and dimensions of the torus distance between two
/// same-shape sets.
double max_displacement(const PointSet& from, const PointSet& to);

}  // namespace lodesq
