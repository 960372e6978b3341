#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lodesq/energy.hpp"
#include "lodesq/errors.hpp"
#include "lodesq/point_set.hpp"

namespace lodesq {

struct OptimizerConfig {
  double alpha = 1e-5;
  std::size_t max_iters = 200;
  /// Stop once max |dE/dx| < grad_tolerance * E.
  double grad_tolerance = 1e-9;
  double min_separation = kDefaultMinSeparation;
  /// Size of the perturbations used to repair coincident coordinates.
  double jitter = 1e-9;
  /// Halve alpha (up to 20 times per step) whenever a step would raise E.
  bool adaptive = false;
  /// Cadence of trace rows (energy and gradient norm).
  std::size_t trace_every = 1;
  /// Cadence of the star / L2 discrepancy columns; 0 disables them.
  std::size_t disc_trace_every = 10;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument on alpha <= 0, trace_every == 0,
  /// min_separation < kKernelFloor or jitter < 10 * min_separation.
  void validate() const;
};

struct TraceRecord {
  std::size_t iter = 0;
  double energy = 0.0;
  double grad_max = 0.0;
  std::optional<double> star_disc;
  std::optional<double> l2_disc;
};

struct OptimizeResult {
  PointSet points;
  std::vector<TraceRecord> trace;
  std::size_t iterations = 0;  ///< steps actually taken
  std::size_t repairs = 0;     ///< degeneracy repairs, including the initial one
  bool converged = false;      ///< stopped on grad_tolerance rather than the budget
  double final_alpha = 0.0;    ///< differs from cfg.alpha only in adaptive mode
};

/// Raised when a degenerate configuration cannot be repaired mid-run.
class OptimizationFailed : public Error {
 public:
  OptimizationFailed(const std::string& what, std::vector<TraceRecord> partial_trace)
      : Error(what), partial_trace_(std::move(partial_trace)) {}
  const std::vector<TraceRecord>& partial_trace() const noexcept { return partial_trace_; }

 private:
  std::vector<TraceRecord> partial_trace_;
};

/// The per-point descent direction: for each n the pair sum
///   sum_{m != n} [prod_{k != i} K(|x_mk - x_nk|)] * kernel_slope(x_ni - x_mi),
/// which is half of energy_gradient() because every unordered pair appears
/// twice in the ordered energy. Step sizes are calibrated against this field.
GradientField descent_direction(const PointSet& points);

/// x_n <- {x_n - alpha * descent_direction(X)_n}. Throws DegenerateSet on degenerate input.
PointSet gradient_step(const PointSet& points, double alpha);

/// Returns `points` unchanged unless it is degenerate at cfg.min_separation;
/// otherwise the higher-indexed member of every coincident pair is nudged by a
/// seeded amount in +-[jitter/2, jitter], repeating for at most N*d rounds.
/// Throws UnrepairableSet if coincidences remain.
PointSet jitter_degenerate(const PointSet& points, const OptimizerConfig& cfg);

/// Fixed-step (or, opt-in, step-halving) descent on the torus with tracing.
/// Iteration 0 of the trace is the (repaired) input.
OptimizeResult optimize(const PointSet& points, const OptimizerConfig& cfg);

/// Header `iter,energy,grad_max,star_disc,l2_disc`; absent metrics are empty fields.
void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out);

}  // namespace lodesq
