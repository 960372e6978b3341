#include "lodesq/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lodesq/errors.hpp"

namespace lodesq {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

LoadedPoints read_points_csv(std::istream& in) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t rows = 0;
  std::size_t wrapped = 0;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    const auto fields = split_fields(text);

    if (!seen_content) {
      seen_content = true;
      if (!parse_number(fields.front())) {
        // header row: names only, but it still fixes the dimension
        dim = fields.size();
        continue;
      }
    }
    if (dim == 0) dim = fields.size();
    if (fields.size() != dim) {
      throw ParseError(line_no, "expected " + std::to_string(dim) + " fields, found " +
                                    std::to_string(fields.size()));
    }
    for (const auto field : fields) {
      const auto value = parse_number(field);
      if (!value) throw ParseError(line_no, "non-numeric field '" + std::string(field) + "'");
      double c = *value;
      if (!(c >= 0.0 && c < 1.0)) {
        c = wrap(c);
        ++wrapped;
      }
      coords.push_back(c);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(line_no == 0 ? 1 : line_no, "no points in input");
  return {PointSet(rows, dim, std::move(coords)), wrapped};
}

LoadedPoints load_points_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return read_points_csv(in);
}

void write_points_csv(const PointSet& points, std::ostream& out) {
  for (std::size_t k = 0; k < points.dim(); ++k) out << (k ? ",x" : "x") << k + 1;
  out << '\n';
  for (std::size_t n = 0; n < points.n_points(); ++n) {
    for (std::size_t k = 0; k < points.dim(); ++k) {
      if (k) out << ',';
      out << format_double(points(n, k));
    }
    out << '\n';
  }
}

void save_points_csv(const PointSet& points, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_points_csv(points, out);
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace lodesq
