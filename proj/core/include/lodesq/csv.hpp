#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "lodesq/point_set.hpp"

namespace lodesq {

struct LoadedPoints {
  PointSet points;
  std::size_t wrapped = 0;  ///< coordinates that were outside [0, 1) and got wrapped
};

/// Reads one point per row, d comma-separated decimals, optional `x1,...,xd`
/// header. LF and CRLF line endings are accepted; blank lines are skipped.
/// Throws ParseError with the 1-based line number on ragged rows, non-numeric
/// fields, or an empty input.
LoadedPoints read_points_csv(std::istream& in);
LoadedPoints load_points_csv(const std::filesystem::path& path);

/// Writes a header row and 17 significant digits per coordinate, which
/// round-trips every double exactly.
void write_points_csv(const PointSet& points, std::ostream& out);
void save_points_csv(const PointSet& points, const std::filesystem::path& path);

/// Shortest-round-trip-safe text for a double ("%.17g").
std::string format_double(double value);

}  // namespace lodesq
