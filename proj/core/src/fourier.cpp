#include "fourier.hpp"

#include <cmath>
#include <numbers>

namespace lodesq::detail {

PhaseTable::PhaseTable(const PointSet& points, std::size_t cutoff)
    : n_(points.n_points()), d_(points.dim()), stride_(cutoff + 1), table_(n_ * d_ * stride_) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t n = 0; n < n_; ++n) {
    for (std::size_t k = 0; k < d_; ++k) {
      for (std::size_t f = 0; f < stride_; ++f) {
        // reduce f * x mod 1 before scaling so large f keeps its precision
        const double angle = two_pi * wrap(static_cast<double>(f) * points(n, k));
        table_[(n * d_ + k) * stride_ + f] = {std::cos(angle), std::sin(angle)};
      }
    }
  }
}

std::complex<double> PhaseTable::exponential_sum(std::span<const long> freq) const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t n = 0; n < n_; ++n) {
    std::complex<double> z{1.0, 0.0};
    for (std::size_t k = 0; k < d_; ++k) z *= (*this)(n, k, freq[k]);
    sum += z;
  }
  return sum;
}

}  // namespace lodesq::detail
