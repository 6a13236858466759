#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace areagrowth {

// Closed interval of doubles with outward rounding.
//
// Arithmetic results are widened by one ulp on each side, which is sound under
// round-to-nearest. Library transcendentals are widened by two ulps; glibc keeps
// exp/log/sin/cos/sinh within one ulp for double.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr explicit Interval(double v) : lo(v), hi(v) {}
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  [[nodiscard]] constexpr double width() const { return hi - lo; }
  [[nodiscard]] constexpr bool contains(double v) const { return lo <= v && v <= hi; }
  [[nodiscard]] constexpr bool contains(const Interval& o) const {
    return lo <= o.lo && o.hi <= hi;
  }
  [[nodiscard]] double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
  // Smallest absolute value attained.
  [[nodiscard]] double mig() const {
    if (lo <= 0.0 && hi >= 0.0) return 0.0;
    return std::min(std::abs(lo), std::abs(hi));
  }

  static constexpr Interval entire() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
};

inline double round_down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

inline double round_up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(double s, const Interval& a);

Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
// Natural log; a.lo <= 0 gives lo = -inf.
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);

// log(sinh(t)) for t >= 0, overflow-free; -inf at t = 0.
double log_sinh(double t);
// Enclosure of log(sinh(t)) over a nonnegative interval.
Interval log_sinh(const Interval& t);

}  // namespace areagrowth
