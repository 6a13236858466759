#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace areagrowth::cli {

enum class AxesMode { Linear, SemilogY, YVsR2, LogLog };

std::optional<AxesMode> parse_axes(std::string_view name) noexcept;
std::string_view axes_name(AxesMode mode) noexcept;

struct PlotResult {
  /// Least-squares slope of the plotted (transformed) points.
  double slope = 0.0;
  std::size_t points = 0;
};

/// Writes an SVG 1.1 line chart of (x, y) after applying the axes transform.
/// The fitted slope is recorded in the <title> and <desc> elements.
/// Throws Error(InvalidArgument) for empty input or values a log axis cannot show.
PlotResult write_svg_plot(std::ostream& out, std::span<const double> x, std::span<const double> y,
                          AxesMode mode, std::string_view x_label, std::string_view y_label);

}  // namespace areagrowth::cli
