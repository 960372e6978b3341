#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "lodesq/lodesq.hpp"

namespace lodesq::cli {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  // commas inside sqrt(...) are not supported, so a plain split is enough
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

ordered_json quality_json(const QualityReport& q, bool with_etk, std::size_t etk_m) {
  ordered_json j;
  j["n"] = q.n_points;
  j["d"] = q.dim;
  j["energy"] = q.energy;
  j["star_disc"] = q.star_disc;
  j["star_disc_sampled"] = q.star_disc_sampled;
  j["l2_disc"] = q.l2_disc;
  if (with_etk) {
    j["etk_square_sum"] = q.etk_square_sum;
    j["etk_m"] = etk_m;
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

LoadedPoints load_input(const std::string& path, std::ostream& err) {
  LoadedPoints loaded = load_points_csv(path);
  if (loaded.wrapped > 0) {
    err << "warning: " << loaded.wrapped << " coordinate(s) in '" << path
        << "' were outside [0, 1) and have been wrapped onto the torus\n";
  }
  return loaded;
}

// ---- gen ---------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::string params;
  std::size_t n = 0;
  std::optional<std::size_t> dim;
  std::optional<std::uint64_t> start_index;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  GeneratorSpec spec;
  try {
    spec.kind = parse_generator_kind(o.kind);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("--kind: ") + e.what());
  }
  for (const auto& token : split_list(o.params)) spec.params.push_back(parse_param(token));
  spec.n_points = o.n;
  spec.dim = o.dim;
  spec.start_index = o.start_index;
  spec.seed = o.seed;

  PointSet points = [&] {
    try {
      return generate(spec);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(std::string("invalid generator spec (--kind/--params/--n/--dim): ") +
                            e.what());
    }
  }();
  save_points_csv(points, o.out);

  ordered_json summary;
  summary["kind"] = std::string(to_string(spec.kind));
  summary["n"] = points.n_points();
  summary["d"] = points.dim();
  out << summary.dump() << '\n';
  return kSuccess;
}

// ---- measure -----------------------------------------------------------

struct MeasureOptions {
  std::string in;
  std::string metrics = "star,l2,energy,etk";
  std::optional<std::size_t> etk_m;
  std::size_t anchors = 100000;
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_measure(const MeasureOptions& o, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> known = {"star", "l2", "energy", "etk"};
  std::set<std::string> wanted;
  for (const auto& m : split_list(o.metrics)) {
    if (!known.count(m)) throw InvalidArgument("--metrics: unknown metric '" + m + "'");
    wanted.insert(m);
  }
  const PointSet points = load_input(o.in, err).points;

  ordered_json report;
  report["n"] = points.n_points();
  report["d"] = points.dim();
  if (wanted.count("energy")) report["energy"] = energy(points);
  if (wanted.count("star")) {
    bool sampled = false;
    report["star_disc"] = star_discrepancy_auto(points, sampled, o.anchors, o.seed);
    report["star_disc_sampled"] = sampled;
  }
  if (wanted.count("l2")) report["l2_disc"] = l2_discrepancy(points);
  if (wanted.count("etk")) {
    const std::size_t m = o.etk_m.value_or(points.n_points());
    report["etk_square_sum"] = etk_square_sum(points, EtkSpec{m});
    report["etk_m"] = m;
  }

  if (o.json) {
    out << report.dump() << '\n';
  } else {
    for (const auto& [key, value] : report.items()) out << key << ' ' << value.dump() << '\n';
  }
  return kSuccess;
}

// ---- optimize ----------------------------------------------------------

struct OptimizeOptions {
  std::string in;
  std::string out;
  std::optional<std::string> trace;
  std::optional<std::string> summary;
  OptimizerConfig cfg;
};

ordered_json config_json(const OptimizeOptions& o) {
  ordered_json j;
  j["in"] = o.in;
  j["out"] = o.out;
  j["alpha"] = o.cfg.alpha;
  j["iters"] = o.cfg.max_iters;
  j["adaptive"] = o.cfg.adaptive;
  j["trace_every"] = o.cfg.disc_trace_every;
  j["seed"] = o.cfg.seed;
  j["grad_tol"] = o.cfg.grad_tolerance;
  j["min_separation"] = o.cfg.min_separation;
  j["jitter"] = o.cfg.jitter;
  if (o.trace) j["trace"] = *o.trace;
  return j;
}

QualityReport summary_quality(const PointSet& points) {
  QualityReport q;
  q.n_points = points.n_points();
  q.dim = points.dim();
  q.energy = energy(points);
  q.star_disc = star_discrepancy_auto(points, q.star_disc_sampled);
  q.l2_disc = l2_discrepancy(points);
  return q;
}

int cmd_optimize(const OptimizeOptions& o, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  const PointSet initial = load_input(o.in, err).points;
  if (is_degenerate(initial, o.cfg.min_separation)) {
    err << "warning: input is degenerate; coincident coordinates will be jittered\n";
  }

  OptimizeResult result = [&] {
    try {
      return optimize(initial, o.cfg);
    } catch (const OptimizationFailed& e) {
      if (o.trace) {
        std::ostringstream trace;
        write_trace_csv(e.partial_trace(), trace);
        write_text_file(*o.trace, trace.str());
      }
      throw;
    }
  }();
  if (result.repairs > 0) err << "note: " << result.repairs << " degeneracy repair(s) applied\n";

  save_points_csv(result.points, o.out);
  if (o.trace) {
    std::ostringstream trace;
    write_trace_csv(result.trace, trace);
    write_text_file(*o.trace, trace.str());
  }

  ordered_json summary;
  summary["config"] = config_json(o);
  summary["initial"] = quality_json(summary_quality(initial), false, 0);
  summary["final"] = quality_json(summary_quality(result.points), false, 0);
  summary["iterations"] = result.iterations;
  summary["converged"] = result.converged;
  summary["repairs"] = result.repairs;
  summary["final_alpha"] = result.final_alpha;
  summary["max_displacement"] = max_displacement(initial, result.points);
  summary["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const std::string text = summary.dump(2) + "\n";
  if (o.summary) write_text_file(*o.summary, text);
  out << text;
  return kSuccess;
}

// ---- lattice -----------------------------------------------------------

struct LatticeOptions {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> a;
  bool sweep = false;
  std::int64_t n_max = 0;
  std::optional<std::string> out;
};

int cmd_lattice(const LatticeOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  if (o.sweep) {
    if (o.n_max < 2) throw InvalidArgument("--n-max: must be >= 2");
    for (std::int64_t n = 2; n <= o.n_max; ++n)
      for (std::int64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) pairs.emplace_back(n, a);
  } else {
    if (!o.n || !o.a) throw InvalidArgument("lattice: give --n and --a, or --sweep --n-max");
    pairs.emplace_back(*o.n, *o.a);
  }

  std::ostringstream csv;
  write_lattice_csv_header(csv);
  bool all_pass = true;
  for (const auto& [n, a] : pairs) {
    if (n < 2 || std::gcd(a, n) != 1) {
      err << "warning: skipping (n=" << n << ", a=" << a << "): not a coprime pair with n >= 2\n";
      continue;
    }
    const LatticeReport report = lattice_report(n, a);
    write_lattice_csv_row(report, csv);
    if (!report_passes(report)) {
      all_pass = false;
      err << "FAIL: (n=" << n << ", a=" << a << ") grad_residual=" << report.grad_residual
          << (report.involution && !report.second_order_ok ? " second-order bound violated" : "")
          << '\n';
    }
  }
  if (o.out) {
    write_text_file(*o.out, csv.str());
  } else {
    out << csv.str();
  }
  return all_pass ? kSuccess : kNumerical;
}

}  // namespace

double parse_param(const std::string& token) {
  const auto bad = [&] { return InvalidArgument("--params: cannot parse '" + token + "'"); };
  if (token == "pi") return std::numbers::pi;
  if (token == "e") return std::numbers::e;
  if (token.rfind("sqrt(", 0) == 0 && token.size() > 6 && token.back() == ')') {
    const double inner = parse_param(token.substr(5, token.size() - 6));
    if (inner < 0.0) throw bad();
    return std::sqrt(inner);
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw bad();
  }
  if (used != token.size() || !std::isfinite(value)) throw bad();
  return value;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lodesq: low-discrepancy point sets, log-sin energy descent and lattice checks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a point set and write it as CSV");
  gen_cmd->add_option("--kind", gen.kind, "halton|hammersley|kronecker|lattice|sobol|random|vdc")
      ->required();
  gen_cmd->add_option("--params", gen.params,
                      "Comma list: bases, lattice multiplier, or Kronecker alphas "
                      "(decimals, pi, e, sqrt(x))");
  gen_cmd->add_option("--n", gen.n, "Number of points")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--dim", gen.dim, "Dimension (sobol, random)");
  gen_cmd->add_option("--start-index", gen.start_index, "First sequence index");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random sets");
  gen_cmd->add_option("--out", gen.out, "Output CSV path")->required();

  MeasureOptions measure;
  auto* measure_cmd = app.add_subcommand("measure", "Report quality metrics of a point set");
  measure_cmd->add_option("--in", measure.in, "Input CSV")->required();
  measure_cmd->add_option("--metrics", measure.metrics, "Comma list of star,l2,energy,etk")
      ->capture_default_str();
  measure_cmd->add_option("--etk-m", measure.etk_m, "ETK frequency cutoff (default N)");
  measure_cmd->add_option("--anchors", measure.anchors,
                          "Anchors for the sampled star discrepancy when exact is over budget")
      ->capture_default_str();
  measure_cmd->add_option("--seed", measure.seed, "Seed for sampled anchors");
  measure_cmd->add_flag("--json", measure.json, "Print one JSON object");

  OptimizeOptions opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Run energy gradient descent on a point set");
  opt_cmd->add_option("--in", opt.in, "Input CSV")->required();
  opt_cmd->add_option("--out", opt.out, "Output CSV for the optimized set")->required();
  opt_cmd->add_option("--alpha", opt.cfg.alpha, "Step size")->capture_default_str();
  opt_cmd->add_option("--iters", opt.cfg.max_iters, "Iteration budget")->capture_default_str();
  opt_cmd->add_flag("--adaptive", opt.cfg.adaptive, "Halve alpha when a step raises the energy");
  opt_cmd->add_option("--trace", opt.trace, "Trace CSV path");
  opt_cmd->add_option("--trace-every", opt.cfg.disc_trace_every,
                      "Discrepancy cadence in the trace (0 disables)")
      ->capture_default_str();
  opt_cmd->add_option("--grad-tol", opt.cfg.grad_tolerance, "Stop when max|grad E| < tol * E")
      ->capture_default_str();
  opt_cmd->add_option("--jitter", opt.cfg.jitter, "Degeneracy repair magnitude")
      ->capture_default_str();
  opt_cmd->add_option("--seed", opt.cfg.seed, "Seed for degeneracy repair");
  opt_cmd->add_option("--summary", opt.summary, "Also write the summary JSON here");

  LatticeOptions lat;
  auto* lat_cmd = app.add_subcommand("lattice", "Verify criticality and second-order sums of lattice rules");
  lat_cmd->add_option("--n", lat.n, "Number of lattice points");
  lat_cmd->add_option("--a", lat.a, "Multiplier");
  lat_cmd->add_flag("--sweep", lat.sweep, "All coprime pairs with 2 <= n <= n-max");
  lat_cmd->add_option("--n-max", lat.n_max, "Largest n in sweep mode");
  lat_cmd->add_option("--out", lat.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (measure_cmd->parsed()) return cmd_measure(measure, out, err);
    if (opt_cmd->parsed()) return cmd_optimize(opt, out, err);
    if (lat_cmd->parsed()) return cmd_lattice(lat, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const DegenerateCoordinate& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const UnrepairableSet& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const OptimizationFailed& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"lodesq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lodesq::cli
