// Sobol direction numbers.
//
// Dimension 1 is the van der Corput sequence (all m_i = 1). Dimensions 2..8
// take the first seven rows of Joe & Kuo's new-joe-kuo-6.21201 table:
//
//   d  s  a  m_i
//   2  1  0  1
//   3  2  1  1 3
//   4  3  1  1 3 1
//   5  3  2  1 1 1
//   6  4  1  1 1 3 3
//   7  4  4  1 3 5 13
//   8  5  2  1 1 5 5 17
//
// s is the degree of the primitive polynomial, a encodes its interior
// coefficients, and m_i are the initial direction integers.

#include <array>
#include <cstdint>
#include <string>

#include "lodesq/errors.hpp"
#include "lodesq/generators.hpp"

namespace lodesq {
namespace {

constexpr unsigned kBits = 32;

struct Primitive {
  unsigned degree;
  unsigned coeffs;
  std::array<std::uint32_t, 5> m;
};

constexpr std::array<Primitive, kSobolMaxDim - 1> kJoeKuo = {{
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
}};

using Directions = std::array<std::uint32_t, kBits>;

// v[i] holds m_{i+1} << (31 - i), i.e. the direction number scaled by 2^32.
Directions directions_for(std::size_t dim_index) {
  Directions v{};
  if (dim_index == 0) {
    for (unsigned i = 0; i < kBits; ++i) v[i] = std::uint32_t{1} << (kBits - 1 - i);
    return v;
  }
  const Primitive& p = kJoeKuo[dim_index - 1];
  const unsigned s = p.degree;
  for (unsigned i = 0; i < s; ++i) v[i] = p.m[i] << (kBits - 1 - i);
  for (unsigned i = s; i < kBits; ++i) {
    v[i] = v[i - s] ^ (v[i - s] >> s);
    for (unsigned k = 1; k < s; ++k) {
      if ((p.coeffs >> (s - 1 - k)) & 1u) v[i] ^= v[i - k];
    }
  }
  return v;
}

}  // namespace

PointSet sobol(std::size_t n_points, std::size_t dim) {
  if (dim == 0) throw InvalidArgument("sobol: dimension must be >= 1");
  if (dim > kSobolMaxDim) {
    throw UnsupportedDimension("sobol: only dimensions 1.." + std::to_string(kSobolMaxDim) +
                               " are embedded; import higher-dimensional sets from CSV");
  }
  if (n_points == 0) throw InvalidArgument("sobol: need at least one point");
  if (n_points > (std::size_t{1} << 31)) throw InvalidArgument("sobol: at most 2^31 points");

  std::vector<Directions> table(dim);
  for (std::size_t k = 0; k < dim; ++k) table[k] = directions_for(k);

  std::vector<double> coords(n_points * dim);
  std::vector<std::uint32_t> state(dim, 0);
  // Gray-code order: point i = point (i-1) xor v[c], c = lowest zero bit of i-1.
  for (std::size_t j = 0; j < n_points; ++j) {
    std::uint64_t prev = j;  // index of the previous point
    unsigned c = 0;
    while (prev & 1u) {
      prev >>= 1;
      ++c;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      state[k] ^= table[k][c];
      coords[j * dim + k] = static_cast<double>(state[k]) * 0x1.0p-32;
    }
  }
  return PointSet(n_points, dim, std::move(coords));
}

}  // namespace lodesq
