#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lodesq/point_set.hpp"

namespace lodesq {

/// Base-b digit reversal of n across the radix point. Throws InvalidArgument for b < 2.
double radical_inverse(std::uint64_t n, std::uint32_t base);

/// Points (phi_b1(n), ..., phi_bd(n)) for n = start_index ... start_index + N - 1.
/// Bases must be pairwise coprime and >= 2.
PointSet halton(std::size_t n_points, std::span<const std::uint32_t> bases,
                std::uint64_t start_index = 1);

/// One-dimensional Halton set.
PointSet van_der_corput(std::size_t n_points, std::uint32_t base, std::uint64_t start_index = 1);

/// Points (j/N, phi_b1(j + s), ..., phi_b(d-1)(j + s)) for j = 0 ... N - 1, where
/// s = start_index offsets only the radical-inverse index. The first coordinate
/// is always exactly j/N.
PointSet hammersley(std::size_t n_points, std::span<const std::uint32_t> bases,
                    std::uint64_t start_index = 0);

/// Points ({n a_1}, ..., {n a_d}) for n = start_index ... start_index + N - 1.
PointSet kronecker(std::size_t n_points, std::span<const double> alphas,
                   std::uint64_t start_index = 1);

/// Rank-1 lattice {(n/N, {a n / N}) : 0 <= n < N}; requires gcd(a, N) = 1.
PointSet lattice_rule(std::size_t n_points, std::int64_t multiplier);

/// Largest dimension covered by the embedded Sobol direction numbers.
inline constexpr std::size_t kSobolMaxDim = 8;

/// First N points of the base-2 Sobol sequence in Gray-code order, skipping
/// the all-zero point (indices 1 ... N). Dimension 1 uses the identity
/// direction numbers; dimensions 2..8 use the Joe-Kuo (new-joe-kuo-6.21201)
/// table. Throws UnsupportedDimension for d > 8.
PointSet sobol(std::size_t n_points, std::size_t dim);

/// N*d draws from lodesq::Rng(seed), filled row by row.
PointSet random_points(std::size_t n_points, std::size_t dim, std::uint64_t seed);

enum class GeneratorKind { van_der_corput, halton, hammersley, kronecker, lattice, sobol, random };

std::string_view to_string(GeneratorKind kind);
/// Accepts the names above plus "vdc"; throws InvalidArgument otherwise.
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::halton;
  /// Bases (halton, hammersley, van_der_corput), the multiplier (lattice) or
  /// the alphas (kronecker). Integer kinds require integral values.
  std::vector<double> params;
  std::size_t n_points = 0;
  /// Required for sobol and random; inferred from params otherwise.
  std::optional<std::size_t> dim;
  /// Defaults to 1 for halton, van_der_corput and kronecker, 0 otherwise.
  std::optional<std::uint64_t> start_index;
  std::uint64_t seed = 0;
};

PointSet generate(const GeneratorSpec& spec);

}  // namespace lodesq
