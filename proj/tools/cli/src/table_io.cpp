#include "areagrowth/table_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "areagrowth/error.hpp"

namespace areagrowth::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("not a number: '{}'", s));
  }
  return v;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("not an integer: '{}'", s));
  }
  return v;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

std::string format_bool(bool v) { return v ? "true" : "false"; }

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_index_range(std::string_view text) {
  const std::size_t pos = text.find("..");
  if (pos == std::string_view::npos) {
    const std::int64_t n = parse_int(text);
    return {n, n};
  }
  const std::int64_t lo = parse_int(text.substr(0, pos));
  const std::int64_t hi = parse_int(text.substr(pos + 2));
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, fmt::format("empty range '{}'", text));
  return {lo, hi};
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorKind::InvalidArgument, fmt::format("missing column '{}'", name));
}

Table read_csv(std::istream& in) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw Error(ErrorKind::InvalidArgument, "CSV row width does not match the header");
    }
    t.rows.push_back(std::move(fields));
  }
  return t;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

}  // namespace areagrowth::cli
