#include "lodesq/optimizer.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "lodesq/csv.hpp"
#include "lodesq/discrepancy.hpp"
#include "lodesq/quality.hpp"
#include "lodesq/rng.hpp"

namespace lodesq {
namespace {

constexpr int kMaxHalvings = 20;

PointSet apply_step(const PointSet& points, const GradientField& gradient, double alpha) {
  const auto src = points.coords();
  const auto grad = gradient.values();
  std::vector<double> coords(src.size());
  // gradient is the exact dE/dx; the step follows half of it (descent_direction)
  for (std::size_t i = 0; i < src.size(); ++i) coords[i] = wrap(src[i] - alpha * 0.5 * grad[i]);
  return PointSet(points.n_points(), points.dim(), std::move(coords));
}

TraceRecord make_record(const PointSet& points, std::size_t iter, double energy_value,
                        double grad_max, bool with_discrepancy) {
  TraceRecord record{iter, energy_value, grad_max, std::nullopt, std::nullopt};
  if (with_discrepancy) {
    bool sampled = false;
    record.star_disc = star_discrepancy_auto(points, sampled);
    record.l2_disc = l2_discrepancy(points);
  }
  return record;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(alpha > 0.0)) throw InvalidArgument("optimizer: alpha must be positive");
  if (trace_every == 0) throw InvalidArgument("optimizer: trace_every must be >= 1");
  if (!(min_separation >= kKernelFloor))
    throw InvalidArgument("optimizer: min_separation must be >= 1e-12");
  if (!(jitter >= 10.0 * min_separation))
    throw InvalidArgument("optimizer: jitter must be at least 10 * min_separation");
}

GradientField descent_direction(const PointSet& points) {
  GradientField field = energy_gradient(points);
  GradientField half(points.n_points(), points.dim());
  for (std::size_t n = 0; n < points.n_points(); ++n)
    for (std::size_t i = 0; i < points.dim(); ++i) half(n, i) = 0.5 * field(n, i);
  return half;
}

PointSet gradient_step(const PointSet& points, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("gradient_step: alpha must be positive");
  return apply_step(points, energy_gradient(points), alpha);
}

PointSet jitter_degenerate(const PointSet& points, const OptimizerConfig& cfg) {
  auto found = find_coincidences(points, cfg.min_separation);
  if (found.empty()) return points;

  const std::size_t d = points.dim();
  std::vector<double> coords(points.coords().begin(), points.coords().end());
  Rng rng(cfg.seed);
  const std::size_t max_rounds = points.n_points() * d;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::vector<bool> moved(coords.size(), false);
    for (const auto& c : found) {
      const std::size_t slot = c.second * d + c.dim;
      if (moved[slot]) continue;
      moved[slot] = true;
      const double magnitude = cfg.jitter * (0.5 + 0.5 * rng.uniform());
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      coords[slot] = wrap(coords[slot] + sign * magnitude);
    }
    PointSet candidate(points.n_points(), d, coords);
    found = find_coincidences(candidate, cfg.min_separation);
    if (found.empty()) return candidate;
  }
  throw UnrepairableSet("jitter_degenerate: coincident coordinates remain after " +
                        std::to_string(max_rounds) + " repair rounds");
}

OptimizeResult optimize(const PointSet& points, const OptimizerConfig& cfg) {
  cfg.validate();
  OptimizeResult result{points, {}, 0, 0, false, cfg.alpha};
  auto fail = [&](const Error& e) -> OptimizationFailed {
    return OptimizationFailed(std::string("optimize: ") + e.what(), result.trace);
  };

  PointSet current = points;
  try {
    current = jitter_degenerate(points, cfg);
  } catch (const UnrepairableSet& e) {
    throw fail(e);
  }
  if (!(current == points)) ++result.repairs;

  double alpha = cfg.alpha;
  const auto disc_due = [&](std::size_t iter) {
    return cfg.disc_trace_every != 0 && iter % cfg.disc_trace_every == 0;
  };

  for (std::size_t iter = 0;; ++iter) {
    auto [energy_value, gradient] = energy_and_gradient(current);
    const double grad_max = gradient.max_abs();
    const bool converged = grad_max < cfg.grad_tolerance * energy_value;
    const bool last = converged || iter == cfg.max_iters;

    if (iter % cfg.trace_every == 0 || last) {
      result.trace.push_back(make_record(current, iter, energy_value, grad_max,
                                         disc_due(iter) || (last && cfg.disc_trace_every != 0)));
    }
    if (last) {
      result.converged = converged;
      break;
    }

    PointSet next = apply_step(current, gradient, alpha);
    try {
      if (is_degenerate(next, cfg.min_separation)) {
        next = jitter_degenerate(next, cfg);
        ++result.repairs;
      }
      if (cfg.adaptive) {
        double next_energy = energy(next);
        int halvings = 0;
        while (next_energy > energy_value && halvings < kMaxHalvings) {
          alpha *= 0.5;
          ++halvings;
          next = apply_step(current, gradient, alpha);
          if (is_degenerate(next, cfg.min_separation)) {
            next = jitter_degenerate(next, cfg);
            ++result.repairs;
          }
          next_energy = energy(next);
        }
        if (next_energy > energy_value) {
          // no step size in reach decreases E; keep the current set
          if (result.trace.back().iter != iter) {
            result.trace.push_back(make_record(current, iter, energy_value, grad_max,
                                               cfg.disc_trace_every != 0));
          }
          break;
        }
      }
    } catch (const UnrepairableSet& e) {
      throw fail(e);
    }
    current = std::move(next);
    ++result.iterations;
  }

  result.points = std::move(current);
  result.final_alpha = alpha;
  return result;
}

void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out) {
  out << "iter,energy,grad_max,star_disc,l2_disc\n";
  for (const auto& r : trace) {
    out << r.iter << ',' << format_double(r.energy) << ',' << format_double(r.grad_max) << ',';
    if (r.star_disc) out << format_double(*r.star_disc);
    out << ',';
    if (r.l2_disc) out << format_double(*r.l2_disc);
    out << '\n';
  }
}

}  // namespace lodesq
