#include "lodesq/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lodesq/errors.hpp"
#include "lodesq/rng.hpp"

namespace lodesq {
namespace {

void check_bases(std::span<const std::uint32_t> bases, const char* who) {
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i] < 2) throw InvalidArgument(std::string(who) + ": bases must be >= 2");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(bases[i], bases[j]) != 1) {
        throw InvalidArgument(std::string(who) + ": bases " + std::to_string(bases[j]) + " and " +
                              std::to_string(bases[i]) + " are not coprime");
      }
    }
  }
}

void check_count(std::size_t n_points, const char* who) {
  if (n_points == 0) throw InvalidArgument(std::string(who) + ": need at least one point");
}

std::vector<std::uint32_t> integral_params(const std::vector<double>& params, const char* who) {
  std::vector<std::uint32_t> out;
  out.reserve(params.size());
  for (double p : params) {
    if (!(p >= 0.0 && p < 4294967296.0) || std::floor(p) != p)
      throw InvalidArgument(std::string(who) + ": parameters must be non-negative integers");
    out.push_back(static_cast<std::uint32_t>(p));
  }
  return out;
}

}  // namespace

double radical_inverse(std::uint64_t n, std::uint32_t base) {
  if (base < 2) throw InvalidArgument("radical_inverse: base must be >= 2");
  // Reverse the digits into an integer numerator over base^digits; one final
  // division keeps the result correctly rounded.
  std::uint64_t reversed = 0;
  double denominator = 1.0;
  while (n > 0) {
    reversed = reversed * base + n % base;
    denominator *= base;
    n /= base;
  }
  return static_cast<double>(reversed) / denominator;
}

PointSet halton(std::size_t n_points, std::span<const std::uint32_t> bases,
                std::uint64_t start_index) {
  check_count(n_points, "halton");
  if (bases.empty()) throw InvalidArgument("halton: need at least one base");
  check_bases(bases, "halton");
  const std::size_t d = bases.size();
  std::vector<double> coords(n_points * d);
  for (std::size_t j = 0; j < n_points; ++j)
    for (std::size_t k = 0; k < d; ++k) coords[j * d + k] = radical_inverse(start_index + j, bases[k]);
  return PointSet(n_points, d, std::move(coords));
}

PointSet van_der_corput(std::size_t n_points, std::uint32_t base, std::uint64_t start_index) {
  const std::uint32_t bases[] = {base};
  return halton(n_points, bases, start_index);
}

PointSet hammersley(std::size_t n_points, std::span<const std::uint32_t> bases,
                    std::uint64_t start_index) {
  check_count(n_points, "hammersley");
  check_bases(bases, "hammersley");
  const std::size_t d = bases.size() + 1;
  std::vector<double> coords(n_points * d);
  for (std::size_t j = 0; j < n_points; ++j) {
    coords[j * d] = static_cast<double>(j) / static_cast<double>(n_points);
    for (std::size_t k = 0; k < bases.size(); ++k)
      coords[j * d + k + 1] = radical_inverse(start_index + j, bases[k]);
  }
  return PointSet(n_points, d, std::move(coords));
}

PointSet kronecker(std::size_t n_points, std::span<const double> alphas, std::uint64_t start_index) {
  check_count(n_points, "kronecker");
  if (alphas.empty()) throw InvalidArgument("kronecker: need at least one alpha");
  const std::size_t d = alphas.size();
  std::vector<double> coords(n_points * d);
  for (std::size_t j = 0; j < n_points; ++j) {
    const double n = static_cast<double>(start_index + j);
    for (std::size_t k = 0; k < d; ++k) coords[j * d + k] = wrap(n * alphas[k]);
  }
  return PointSet(n_points, d, std::move(coords));
}

PointSet lattice_rule(std::size_t n_points, std::int64_t multiplier) {
  check_count(n_points, "lattice_rule");
  const auto n = static_cast<std::int64_t>(n_points);
  const std::int64_t a = ((multiplier % n) + n) % n;
  if (std::gcd(multiplier, n) != 1) {
    throw InvalidArgument("lattice_rule: multiplier " + std::to_string(multiplier) +
                          " is not coprime to N = " + std::to_string(n));
  }
  std::vector<double> coords(n_points * 2);
  for (std::int64_t j = 0; j < n; ++j) {
    coords[2 * j] = static_cast<double>(j) / static_cast<double>(n);
    coords[2 * j + 1] = static_cast<double>((a * j) % n) / static_cast<double>(n);
  }
  return PointSet(n_points, 2, std::move(coords));
}

PointSet random_points(std::size_t n_points, std::size_t dim, std::uint64_t seed) {
  check_count(n_points, "random_points");
  if (dim == 0) throw InvalidArgument("random_points: dimension must be >= 1");
  Rng rng(seed);
  std::vector<double> coords(n_points * dim);
  for (double& c : coords) c = rng.uniform();
  return PointSet(n_points, dim, std::move(coords));
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::van_der_corput: return "vdc";
    case GeneratorKind::halton: return "halton";
    case GeneratorKind::hammersley: return "hammersley";
    case GeneratorKind::kronecker: return "kronecker";
    case GeneratorKind::lattice: return "lattice";
    case GeneratorKind::sobol: return "sobol";
    case GeneratorKind::random: return "random";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "vdc" || name == "van_der_corput") return GeneratorKind::van_der_corput;
  if (name == "halton") return GeneratorKind::halton;
  if (name == "hammersley") return GeneratorKind::hammersley;
  if (name == "kronecker") return GeneratorKind::kronecker;
  if (name == "lattice") return GeneratorKind::lattice;
  if (name == "sobol") return GeneratorKind::sobol;
  if (name == "random") return GeneratorKind::random;
  throw InvalidArgument("unknown generator kind '" + std::string(name) + "'");
}

PointSet generate(const GeneratorSpec& spec) {
  const auto start_or = [&](std::uint64_t fallback) { return spec.start_index.value_or(fallback); };
  const auto expect_dim = [&](std::size_t d, const char* who) {
    if (spec.dim && *spec.dim != d) {
      throw InvalidArgument(std::string(who) + ": parameters imply dimension " + std::to_string(d) +
                            " but " + std::to_string(*spec.dim) + " was requested");
    }
  };

  switch (spec.kind) {
    case GeneratorKind::van_der_corput: {
      const auto bases = integral_params(spec.params, "vdc");
      if (bases.size() != 1) throw InvalidArgument("vdc: expects exactly one base");
      expect_dim(1, "vdc");
      return van_der_corput(spec.n_points, bases[0], start_or(1));
    }
    case GeneratorKind::halton: {
      const auto bases = integral_params(spec.params, "halton");
      expect_dim(bases.size(), "halton");
      return halton(spec.n_points, bases, start_or(1));
    }
    case GeneratorKind::hammersley: {
      const auto bases = integral_params(spec.params, "hammersley");
      expect_dim(bases.size() + 1, "hammersley");
      return hammersley(spec.n_points, bases, start_or(0));
    }
    case GeneratorKind::kronecker:
      expect_dim(spec.params.size(), "kronecker");
      return kronecker(spec.n_points, spec.params, start_or(1));
    case GeneratorKind::lattice: {
      if (spec.params.size() != 1 || std::floor(spec.params[0]) != spec.params[0])
        throw InvalidArgument("lattice: expects exactly one integer multiplier");
      expect_dim(2, "lattice");
      return lattice_rule(spec.n_points, static_cast<std::int64_t>(spec.params[0]));
    }
    case GeneratorKind::sobol:
      if (!spec.dim) throw InvalidArgument("sobol: dimension is required");
      return sobol(spec.n_points, *spec.dim);
    case GeneratorKind::random:
      if (!spec.dim) throw InvalidArgument("random: dimension is required");
      return random_points(spec.n_points, *spec.dim, spec.seed);
  }
  throw InvalidArgument("unknown generator kind");
}

}  // namespace lodesq
