#include "areagrowth/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include <fmt/format.h>

#include "areagrowth/error.hpp"
#include "areagrowth/table_io.hpp"

namespace areagrowth::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 56.0;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::optional<AxesMode> parse_axes(std::string_view name) noexcept {
  if (name == "linear") return AxesMode::Linear;
  if (name == "semilog-y") return AxesMode::SemilogY;
  if (name == "y-vs-r2") return AxesMode::YVsR2;
  if (name == "log-log") return AxesMode::LogLog;
  return std::nullopt;
}

std::string_view axes_name(AxesMode mode) noexcept {
  switch (mode) {
    case AxesMode::Linear: return "linear";
    case AxesMode::SemilogY: return "semilog-y";
    case AxesMode::YVsR2: return "y-vs-r2";
    case AxesMode::LogLog: return "log-log";
  }
  return "?";
}

PlotResult write_svg_plot(std::ostream& out, std::span<const double> x, std::span<const double> y,
                          AxesMode mode, std::string_view x_label, std::string_view y_label) {
  if (x.empty() || x.size() != y.size()) throw Error(ErrorKind::InvalidArgument, "nothing to plot");
  // y-vs-r2 plots log y against r^2, the coordinates in which Gaussian growth is linear.
  const bool log_x = mode == AxesMode::LogLog;
  const bool log_y = mode != AxesMode::Linear;
  std::vector<double> px(x.size());
  std::vector<double> py(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((log_x && !(x[i] > 0.0)) || (log_y && !(y[i] > 0.0))) {
      throw Error(ErrorKind::InvalidArgument, "non-positive value on a logarithmic axis");
    }
    px[i] = log_x ? std::log(x[i]) : (mode == AxesMode::YVsR2 ? x[i] * x[i] : x[i]);
    py[i] = log_y ? std::log(y[i]) : y[i];
  }

  PlotResult res;
  res.points = px.size();
  const auto n = static_cast<double>(px.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    mx += px[i];
    my += py[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    sxx += (px[i] - mx) * (px[i] - mx);
    sxy += (px[i] - mx) * (py[i] - my);
  }
  res.slope = sxx > 0.0 ? sxy / sxx : 0.0;

  auto [xmin, xmax] = std::minmax_element(px.begin(), px.end());
  auto [ymin, ymax] = std::minmax_element(py.begin(), py.end());
  const double x0 = *xmin;
  const double xs = *xmax > *xmin ? *xmax - *xmin : 1.0;
  const double y0 = *ymin;
  const double ys = *ymax > *ymin ? *ymax - *ymin : 1.0;
  auto sx = [&](double v) { return kMargin + (v - x0) / xs * (kWidth - 2 * kMargin); };
  auto sy = [&](double v) { return kHeight - kMargin - (v - y0) / ys * (kHeight - 2 * kMargin); };

  const std::string title = fmt::format("{} vs {} ({}) slope={}", escape(y_label), escape(x_label),
                                        axes_name(mode), format_real(res.slope));
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      kWidth, kHeight, kWidth, kHeight);
  out << "<title>" << title << "</title>\n";
  out << fmt::format("<desc>axes={} points={} slope={}</desc>\n", axes_name(mode), res.points,
                     format_real(res.slope));
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << fmt::format(
      "<path d=\"M{0} {1} L{0} {2} L{3} {2}\" stroke=\"black\" fill=\"none\"/>\n", kMargin, kMargin,
      kHeight - kMargin, kWidth - kMargin);
  out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (i) out << ' ';
    out << fmt::format("{:.3f},{:.3f}", sx(px[i]), sy(py[i]));
  }
  out << "\"/>\n";
  for (std::size_t i = 0; i < px.size(); ++i) {
    out << fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"2.5\" fill=\"#1f77b4\"/>\n", sx(px[i]),
                       sy(py[i]));
  }
  const std::string x_axis = log_x ? fmt::format("log {}", x_label)
                             : mode == AxesMode::YVsR2 ? fmt::format("{}^2", x_label)
                                                       : std::string(x_label);
  const std::string y_axis = log_y ? fmt::format("log {}", y_label) : std::string(y_label);
  out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
                     kWidth / 2, kHeight - 16, escape(x_axis));
  out << fmt::format(
      "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\" "
      "transform=\"rotate(-90 16 {})\">{}</text>\n",
      kHeight / 2, kHeight / 2, escape(y_axis));
  out << fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"11\">x: [{:.4g}, {:.4g}]  y: "
      "[{:.4g}, {:.4g}]</text>\n",
      kWidth / 2, kMargin / 2, x0, *xmax, y0, *ymax);
  out << "</svg>\n";
  return res;
}

}  // namespace areagrowth::cli
