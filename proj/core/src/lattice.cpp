#include "lodesq/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "lodesq/csv.hpp"
#include "lodesq/energy.hpp"
#include "lodesq/errors.hpp"
#include "lodesq/generators.hpp"
#include "lodesq/rng.hpp"

namespace lodesq {
namespace {

constexpr double kPi = std::numbers::pi;

void check_pair(std::int64_t n, std::int64_t a, std::int64_t min_n) {
  if (n < min_n) throw InvalidArgument("lattice: n must be >= " + std::to_string(min_n));
  if (std::gcd(a, n) != 1) {
    throw InvalidArgument("lattice: a = " + std::to_string(a) + " is not coprime to n = " +
                          std::to_string(n));
  }
}

// sin, cos of pi t for t in (0, 1), folded so t near 1 keeps its precision.
struct Trig {
  double sin;
  double cos;
};

Trig trig_pi(double t) {
  if (t > 0.5) {
    const double f = 1.0 - t;
    return {std::sin(kPi * f), -std::cos(kPi * f)};
  }
  return {std::sin(kPi * t), std::cos(kPi * t)};
}

double kernel_of(const Trig& tr) { return 1.0 - std::log(2.0 * tr.sin); }

}  // namespace

bool is_involution(std::int64_t n, std::int64_t a) {
  const std::int64_t r = ((a % n) + n) % n;
  return (r * r) % n == 1 % n;
}

SecondOrderSums second_order_sums(std::int64_t n, std::int64_t a) {
  check_pair(n, a, 2);
  const std::int64_t ar = ((a % n) + n) % n;
  SecondOrderSums sums{0.0, 0.0, 0.0};
  const double nd = static_cast<double>(n);
  for (std::int64_t k = 1; k < n; ++k) {
    const Trig t = trig_pi(static_cast<double>(k) / nd);
    const Trig s = trig_pi(static_cast<double>((ar * k) % n) / nd);
    sums.sum_I += kernel_of(s) / (t.sin * t.sin);
    sums.sum_II += (t.cos / t.sin) * (s.cos / s.sin);
    sums.sum_III += kernel_of(t) / (s.sin * s.sin);
  }
  return sums;
}

double criticality_residual(std::int64_t n, std::int64_t a) {
  check_pair(n, a, 2);
  const auto [value, gradient] = energy_and_gradient(lattice_rule(static_cast<std::size_t>(n), a));
  return gradient.max_abs() / value;
}

double origin_perturbation_delta(std::int64_t n, std::int64_t a, double dx, double dy) {
  check_pair(n, a, 2);
  const PointSet lattice = lattice_rule(static_cast<std::size_t>(n), a);
  const double moved[2] = {wrap(dx), wrap(dy)};
  // the lattice point at the origin is row 0
  double delta = 0.0;
  for (std::size_t m = 1; m < lattice.n_points(); ++m) {
    double before = 1.0;
    double after = 1.0;
    for (std::size_t k = 0; k < 2; ++k) {
      before *= logsin_kernel(lattice(m, k));
      after *= logsin_kernel(std::abs(moved[k] - lattice(m, k)));
    }
    delta += after - before;
  }
  return 2.0 * delta;  // ordered pairs
}

ProbeResult probe_local_minimum(std::int64_t n, std::int64_t a, std::span<const double> eps_grid,
                                std::size_t n_directions, std::uint64_t seed) {
  check_pair(n, a, 2);
  std::vector<double> eps;
  for (double e : eps_grid)
    if (e > 0.0) eps.push_back(e);
  std::sort(eps.begin(), eps.end());
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  if (eps.size() < 2) throw InvalidArgument("probe: need at least two distinct positive eps values");
  if (n_directions == 0) throw InvalidArgument("probe: need at least one direction");

  Rng rng(seed);
  ProbeResult result;
  result.strict_minimum = true;
  result.min_increase = INFINITY;
  result.min_slope = INFINITY;
  result.max_slope = -INFINITY;

  for (std::size_t dir = 0; dir < n_directions; ++dir) {
    const double theta = 2.0 * kPi * rng.uniform();
    const double ux = std::cos(theta);
    const double uy = std::sin(theta);
    // least-squares slope of log(delta) against log(eps)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    bool all_positive = true;
    for (double e : eps) {
      const double delta = origin_perturbation_delta(n, a, e * ux, e * uy);
      result.min_increase = std::min(result.min_increase, delta);
      if (!(delta > 0.0)) {
        all_positive = false;
        continue;
      }
      const double lx = std::log(e);
      const double ly = std::log(delta);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    if (!all_positive) {
      result.strict_minimum = false;
      continue;
    }
    const double count = static_cast<double>(eps.size());
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    result.min_slope = std::min(result.min_slope, slope);
    result.max_slope = std::max(result.max_slope, slope);
    if (std::abs(slope - 2.0) > 0.1) result.strict_minimum = false;
  }
  return result;
}

bool local_min_probe(std::int64_t n, std::int64_t a, std::span<const double> eps_grid,
                     std::size_t n_directions, std::uint64_t seed) {
  return probe_local_minimum(n, a, eps_grid, n_directions, seed).strict_minimum;
}

bool pair_inequality_holds(double x, double y) {
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
    throw InvalidArgument("pair_inequality_holds: x and y must lie in (0, 1)");
  const Trig tx = trig_pi(x);
  const Trig ty = trig_pi(y);
  const double lhs = 2.0 * std::abs((tx.cos / tx.sin) * (ty.cos / ty.sin));
  const double rhs = kernel_of(tx) / (ty.sin * ty.sin) + kernel_of(ty) / (tx.sin * tx.sin);
  return lhs < rhs;
}

ConjectureSums conjecture_sums(std::int64_t n, std::int64_t a) {
  const SecondOrderSums s = second_order_sums(n, a);
  return {s.sum_I,
          s.sum_II,
          s.sum_III,
          s.sum_I * s.sum_II >= s.sum_III * s.sum_III,
          s.sum_I * s.sum_III >= s.sum_II * s.sum_II};
}

LatticeReport lattice_report(std::int64_t n, std::int64_t a) {
  LatticeReport r;
  r.n = n;
  r.a = a;
  r.involution = is_involution(n, a);
  r.grad_residual = criticality_residual(n, a);
  const SecondOrderSums s = second_order_sums(n, a);
  r.sum_I = s.sum_I;
  r.sum_II = s.sum_II;
  r.sum_III = s.sum_III;
  const ConjectureSums c = conjecture_sums(n, a);
  r.sum_1 = c.sum_1;
  r.sum_2 = c.sum_2;
  r.sum_3 = c.sum_3;
  r.second_order_ok = std::abs(s.sum_II) <= s.sum_I + s.sum_III;
  r.conjecture_ok = c.conjecture_ok;
  r.determinant_ok = c.determinant_ok;
  return r;
}

bool report_passes(const LatticeReport& report, double residual_tolerance) {
  if (!(report.grad_residual <= residual_tolerance)) return false;
  return !report.involution || report.second_order_ok;
}

void write_lattice_csv_header(std::ostream& out) {
  out << "n,a,involution,grad_residual,sum_I,sum_II,sum_III,sum_1,sum_2,sum_3,"
         "second_order_ok,conjecture_ok\n";
}

void write_lattice_csv_row(const LatticeReport& r, std::ostream& out) {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  out << r.n << ',' << r.a << ',' << flag(r.involution) << ',' << format_double(r.grad_residual)
      << ',' << format_double(r.sum_I) << ',' << format_double(r.sum_II) << ','
      << format_double(r.sum_III) << ',' << format_double(r.sum_1) << ','
      << format_double(r.sum_2) << ',' << format_double(r.sum_3) << ','
      << flag(r.second_order_ok) << ',' << flag(r.conjecture_ok) << '\n';
}

}  // namespace lodesq
