#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace areagrowth::cli {

/// 17 significant digits, the format of every number the tool prints.
std::string format_real(double v);
std::string format_bool(bool v);

/// Comma-separated reals, e.g. "3.2,4,4.8".
std::vector<double> parse_real_list(std::string_view text);
/// Inclusive integer range "lo..hi".
std::pair<std::int64_t, std::int64_t> parse_index_range(std::string_view text);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws Error(InvalidArgument) if absent.
  [[nodiscard]] std::size_t column(std::string_view name) const;
};

/// Parses UTF-8 CSV with a header line; no quoting.
Table read_csv(std::istream& in);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace areagrowth::cli
