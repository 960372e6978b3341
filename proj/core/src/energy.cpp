#include "lodesq/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fourier.hpp"
#include "lodesq/errors.hpp"
#include "lodesq/parallel.hpp"

namespace lodesq {
namespace {

constexpr double kPi = std::numbers::pi;

bool near_degenerate(double t) { return t < kKernelFloor || t > 1.0 - kKernelFloor; }

// Kernel value and the cot factor for a distance t in (0, 1). The sine is
// evaluated at min(t, 1 - t) so that t close to 1 keeps full precision.
struct KernelTerms {
  double value;
  double cot;
};

KernelTerms kernel_terms(double t) {
  const bool upper = t > 0.5;
  const double folded = upper ? 1.0 - t : t;
  const double s = std::sin(kPi * folded);
  const double c = std::cos(kPi * folded);
  return {1.0 - std::log(2.0 * s), upper ? -c / s : c / s};
}

// One row of the ordered-pair sums: the energy contribution of point n and,
// if `grad_row` is non-empty, the full partial derivatives with respect to x_n.
double accumulate_row(const PointSet& points, std::size_t n, std::span<double> grad_row,
                      std::vector<double>& kernel, std::vector<double>& slope,
                      std::vector<double>& suffix) {
  const std::size_t d = points.dim();
  const auto xn = points.row(n);
  double row_energy = 0.0;
  std::fill(grad_row.begin(), grad_row.end(), 0.0);

  for (std::size_t m = 0; m < points.n_points(); ++m) {
    if (m == n) continue;
    const auto xm = points.row(m);
    double product = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double u = xn[k] - xm[k];
      const double t = std::abs(u);
      if (near_degenerate(t)) throw DegenerateSet(std::min(m, n), std::max(m, n), k);
      const auto terms = kernel_terms(t);
      kernel[k] = terms.value;
      slope[k] = u > 0.0 ? -kPi * terms.cot : kPi * terms.cot;
      product *= terms.value;
    }
    row_energy += product;

    if (grad_row.empty()) continue;
    // prod_{k != i} via prefix and suffix products, no division
    suffix[d] = 1.0;
    for (std::size_t k = d; k-- > 0;) suffix[k] = suffix[k + 1] * kernel[k];
    double prefix = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      grad_row[i] += 2.0 * prefix * suffix[i + 1] * slope[i];
      prefix *= kernel[i];
    }
  }
  return row_energy;
}

EnergyAndGradient evaluate(const PointSet& points, bool with_gradient) {
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  std::vector<double> row_energy(n_points, 0.0);
  GradientField gradient(with_gradient ? n_points : 0, d);

  parallel_for(n_points, [&](std::size_t begin, std::size_t end) {
    std::vector<double> kernel(d), slope(d), suffix(d + 1);
    for (std::size_t n = begin; n < end; ++n) {
      std::span<double> grad_row;
      if (with_gradient) grad_row = std::span<double>(&gradient(n, 0), d);
      row_energy[n] = accumulate_row(points, n, grad_row, kernel, slope, suffix);
    }
  });

  double total = 0.0;
  for (double r : row_energy) total += r;
  return {total, std::move(gradient)};
}

}  // namespace

double logsin_kernel(double t) {
  if (!(t > 0.0 && t < 1.0) || near_degenerate(t))
    throw DegenerateCoordinate("logsin_kernel: argument at a coincident coordinate");
  return kernel_terms(t).value;
}

double kernel_slope(double u) {
  const double t = std::abs(u);
  if (!(t > 0.0 && t < 1.0) || near_degenerate(t))
    throw DegenerateCoordinate("kernel_slope: argument at a coincident coordinate");
  const double cot = kernel_terms(t).cot;
  return u > 0.0 ? -kPi * cot : kPi * cot;
}

double GradientField::max_abs() const {
  double worst = 0.0;
  for (double v : values_) worst = std::max(worst, std::abs(v));
  return worst;
}

double GradientField::column_sum(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t n = 0; n < n_; ++n) sum += (*this)(n, i);
  return sum;
}

double energy(const PointSet& points) { return evaluate(points, false).energy; }

GradientField energy_gradient(const PointSet& points) {
  return evaluate(points, true).gradient;
}

EnergyAndGradient energy_and_gradient(const PointSet& points) { return evaluate(points, true); }

double normalized_energy(const PointSet& points) {
  if (points.dim() != 1) throw InvalidArgument("normalized_energy: only defined for d = 1");
  const double n = static_cast<double>(points.n_points());
  return energy(points) / (n * n);
}

std::optional<std::string> SpectralSpec::warning() const {
  if (sigma >= 0.0)
    return "spectral energy: sigma >= 0 does not converge as the cutoff grows";
  return std::nullopt;
}

double spectral_energy(const PointSet& points, const SpectralSpec& spec) {
  if (spec.cutoff < 1) throw InvalidArgument("spectral_energy: cutoff must be >= 1");
  const std::size_t n_points = points.n_points();
  const std::size_t d = points.dim();
  const std::size_t side = 2 * spec.cutoff + 1;
  if (std::pow(static_cast<double>(side), static_cast<double>(d)) * static_cast<double>(n_points) >
      kSpectralBudget) {
    throw BudgetExceeded("spectral_energy: (2M+1)^d * N exceeds the evaluation budget");
  }
  if (n_points < 2) return 0.0;
  require_non_degenerate(points);

  const detail::PhaseTable phases(points, spec.cutoff);
  const double count = static_cast<double>(n_points);
  double total = 0.0;
  detail::for_each_half_frequency(d, spec.cutoff, [&](std::span<const long> m) {
    double norm2 = 0.0;
    for (long v : m) norm2 += static_cast<double>(v) * static_cast<double>(v);
    const double weight = std::pow(2.0 * kPi * std::sqrt(norm2), spec.sigma);
    // sum_{k != l} cos(2 pi <m, x_k - x_l>) = |S(m)|^2 - N, and -m contributes the same
    total += 2.0 * weight * (std::norm(phases.exponential_sum(m)) - count);
  });
  return total;
}

double partial_cosine_sum(std::uint64_t n, double x) {
  double sum = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    sum += std::cos(2.0 * kPi * wrap(kd * x)) / kd;
  }
  return sum;
}

double max_partial_cosine_sum(std::uint64_t n_max, double x) {
  if (n_max == 0) throw InvalidArgument("max_partial_cosine_sum: n_max must be >= 1");
  double sum = 0.0;
  double best = -INFINITY;
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    const double kd = static_cast<double>(k);
    sum += std::cos(2.0 * kPi * wrap(kd * x)) / kd;
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace lodesq
