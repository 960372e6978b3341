#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lodesq/point_set.hpp"

namespace lodesq {

/// Kernel arguments closer than this to 0 or 1 raise DegenerateCoordinate.
inline constexpr double kKernelFloor = 1e-12;

/// 1 - ln(2 sin(pi t)) for t in (0, 1). Always >= 1 - ln 2 > 0.
double logsin_kernel(double t);

/// d/du [1 - ln(2 sin(pi |u|))] = -pi cot(pi |u|) sign(u) for 0 < |u| < 1.
double kernel_slope(double u);

/// N x d table of partial derivatives, same shape as the set it came from.
class GradientField {
 public:
  GradientField(std::size_t n_points, std::size_t dim)
      : n_(n_points), d_(dim), values_(n_points * dim, 0.0) {}

  std::size_t n_points() const noexcept { return n_; }
  std::size_t dim() const noexcept { return d_; }

  double operator()(std::size_t n, std::size_t i) const { return values_[n * d_ + i]; }
  double& operator()(std::size_t n, std::size_t i) { return values_[n * d_ + i]; }
  std::span<const double> values() const noexcept { return values_; }

  double max_abs() const;
  double column_sum(std::size_t i) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> values_;
};

/// Sum over ordered pairs m != n of prod_k logsin_kernel(|x_mk - x_nk|).
/// Throws DegenerateSet naming the pair and dimension of a coincidence.
double energy(const PointSet& points);

/// Exact partial derivatives of energy(): each unordered pair appears twice
/// in the ordered sum, so entry (n, i) is
///   2 * sum_{m != n} [prod_{k != i} K(|x_mk - x_nk|)] * kernel_slope(x_ni - x_mi).
GradientField energy_gradient(const PointSet& points);

struct EnergyAndGradient {
  double energy;
  GradientField gradient;
};

/// Both quantities from one pass over the pairs.
EnergyAndGradient energy_and_gradient(const PointSet& points);

/// energy / N^2 for one-dimensional sets; tends to 1 for uniformly
/// distributed sequences. Throws InvalidArgument if d != 1.
double normalized_energy(const PointSet& points);

/// Truncated Fourier-multiplier energy
///   sum_{k != l} sum_{0 < |m|_inf <= cutoff} (2 pi |m|_2)^sigma cos(2 pi <m, x_k - x_l>).
/// With sigma = -1 in one dimension, pi * value + N(N-1) tends to energy().
struct SpectralSpec {
  double sigma = -1.0;
  std::size_t cutoff = 1;

  /// Non-empty when sigma >= 0, where the untruncated sum diverges.
  std::optional<std::string> warning() const;
};

/// Budget on (2 * cutoff + 1)^d * N for spectral_energy.
inline constexpr double kSpectralBudget = 1e9;

double spectral_energy(const PointSet& points, const SpectralSpec& spec);

/// sum_{k=1}^{n} cos(2 pi k x) / k.
double partial_cosine_sum(std::uint64_t n, double x);

/// max over 1 <= n <= n_max of partial_cosine_sum(n, x), in one pass.
double max_partial_cosine_sum(std::uint64_t n_max, double x);

}  // namespace lodesq
