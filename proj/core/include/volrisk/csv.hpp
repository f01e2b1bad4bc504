#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace volrisk::csv {

/// A parsed CSV file: one header row plus data rows, all cells as text.
/// The toolkit's files are plain comma-separated numerics; no quoting.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of `name` in the header, or npos.
  std::size_t column(const std::string& name) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Reads a CSV stream.  Cells are trimmed of surrounding whitespace and a
/// trailing '\r' (CRLF input); blank lines are skipped.
Table read(std::istream& in);

/// Reads a CSV file; throws Error{Errc::io_failure} if it cannot be opened.
Table read_file(const std::string& path);

/// Parses a decimal number with std::from_chars (locale-independent, decimal
/// point only).  Returns false if the cell is not a complete number.
bool parse_double(const std::string& cell, double& out);

/// Shortest decimal string that round-trips the exact double value.
/// Used by every report writer so emitted files are byte-reproducible and
/// re-ingest to identical values.
std::string format_double(double value);

}  // namespace volrisk::csv
