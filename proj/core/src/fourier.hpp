#pragma once

// Shared machinery for exponential sums S(m) = sum_n exp(2 pi i <m, x_n>)
// over the frequency cube |m|_inf <= M.

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <vector>

#include "lodesq/point_set.hpp"

namespace lodesq::detail {

/// exp(2 pi i f x_nk) for f = 0..M; negative frequencies by conjugation.
class PhaseTable {
 public:
  PhaseTable(const PointSet& points, std::size_t cutoff);

  std::complex<double> operator()(std::size_t n, std::size_t k, long f) const {
    const auto& z = table_[(n * d_ + k) * stride_ + static_cast<std::size_t>(std::labs(f))];
    return f < 0 ? std::conj(z) : z;
  }

  /// S(freq) for one frequency vector.
  std::complex<double> exponential_sum(std::span<const long> freq) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::size_t stride_;
  std::vector<std::complex<double>> table_;
};

/// Calls visit(freq) once per frequency in the half cube: |freq|_inf <= cutoff
/// whose first non-zero component is positive. Together with -freq these
/// cover every non-zero frequency of the cube exactly once.
template <class Visit>
void for_each_half_frequency(std::size_t dim, std::size_t cutoff, Visit&& visit) {
  const long m = static_cast<long>(cutoff);
  std::vector<long> freq(dim, -m);
  while (true) {
    long first_nonzero = 0;
    for (long v : freq) {
      if (v != 0) {
        first_nonzero = v;
        break;
      }
    }
    if (first_nonzero > 0) visit(std::span<const long>(freq));
    std::size_t k = dim;
    while (true) {
      if (k == 0) return;
      --k;
      if (freq[k] < m) {
        ++freq[k];
        break;
      }
      freq[k] = -m;
    }
  }
}

}  // namespace lodesq::detail
