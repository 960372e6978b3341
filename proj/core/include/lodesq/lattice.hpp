#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace lodesq {

/// a^2 = 1 (mod n).
bool is_involution(std::int64_t n, std::int64_t a);

/// Second-order coefficients of the energy when the lattice point at the
/// origin moves by (e, f), with the pi^2 e^2 / 2, pi^2 e f and pi^2 f^2 / 2
/// prefactors removed. With t_k = k/n and s_k = {a k / n}, k = 1 .. n-1:
///   sum_I   = sum csc^2(pi t_k) (1 - ln 2 sin(pi s_k))
///   sum_II  = sum cot(pi t_k) cot(pi s_k)
///   sum_III = sum csc^2(pi s_k) (1 - ln 2 sin(pi t_k))
struct SecondOrderSums {
  double sum_I;
  double sum_II;
  double sum_III;
};

/// Requires n >= 2 and gcd(a, n) = 1.
SecondOrderSums second_order_sums(std::int64_t n, std::int64_t a);

/// max |dE/dx| / E for lattice_rule(n, a).
double criticality_residual(std::int64_t n, std::int64_t a);

/// E(X') - E(X) where X' moves the lattice point at the origin by (dx, dy).
/// Only the pairs touching that point are summed, so small changes keep
/// their relative precision.
double origin_perturbation_delta(std::int64_t n, std::int64_t a, double dx, double dy);

struct ProbeResult {
  bool strict_minimum = false;  ///< every probe increased E and every slope is in 2 +- 0.1
  double min_increase = 0.0;    ///< smallest energy change seen over all probes
  double min_slope = 0.0;       ///< extremes of the per-direction log-log slopes
  double max_slope = 0.0;
};

/// Moves the origin point by eps in `n_directions` seeded random directions
/// for every eps in the grid and fits log(delta E) against log(eps) per
/// direction. Needs at least two distinct positive eps values.
ProbeResult probe_local_minimum(std::int64_t n, std::int64_t a, std::span<const double> eps_grid,
                                std::size_t n_directions, std::uint64_t seed);

bool local_min_probe(std::int64_t n, std::int64_t a, std::span<const double> eps_grid,
                     std::size_t n_directions, std::uint64_t seed);

/// Strict inequality
///   2 |cot(pi x) cot(pi y)| < (1 - ln 2 sin(pi x)) csc^2(pi y) + csc^2(pi x) (1 - ln 2 sin(pi y))
/// evaluated directly. Throws InvalidArgument unless 0 < x, y < 1.
bool pair_inequality_holds(double x, double y);

/// The three sums whose product inequality decides strict minimality in
/// general. As printed they coincide with (sum_I, sum_II, sum_III); both the
/// literal reading (1)(2) >= (3)^2 and the determinant reading
/// sum_I * sum_III >= sum_II^2 are reported.
struct ConjectureSums {
  double sum_1;
  double sum_2;
  double sum_3;
  bool conjecture_ok;   ///< sum_1 * sum_2 >= sum_3^2
  bool determinant_ok;  ///< sum_I * sum_III >= sum_II^2
};

ConjectureSums conjecture_sums(std::int64_t n, std::int64_t a);

struct LatticeReport {
  std::int64_t n = 0;
  std::int64_t a = 0;
  bool involution = false;
  double grad_residual = 0.0;
  double sum_I = 0.0;
  double sum_II = 0.0;
  double sum_III = 0.0;
  double sum_1 = 0.0;
  double sum_2 = 0.0;
  double sum_3 = 0.0;
  bool second_order_ok = false;  ///< |sum_II| <= sum_I + sum_III
  bool conjecture_ok = false;
  bool determinant_ok = false;
};

LatticeReport lattice_report(std::int64_t n, std::int64_t a);

/// Criticality is unconditional; the second-order bound is asserted only for involutions.
bool report_passes(const LatticeReport& report, double residual_tolerance = 1e-9);

void write_lattice_csv_header(std::ostream& out);
void write_lattice_csv_row(const LatticeReport& report, std::ostream& out);

}  // namespace lodesq
