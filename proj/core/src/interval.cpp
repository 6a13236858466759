#include "areagrowth/interval.hpp"

#include <numbers>

namespace areagrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLibmUlps = 2;

// 0 * inf inside an interval product is 0: the zero endpoint is exact.
double mul_or_zero(double a, double b) {
  const double p = a * b;
  return std::isnan(p) ? 0.0 : p;
}

Interval widened(double lo, double hi, int ulps) {
  return {round_down(lo, ulps), round_up(hi, ulps)};
}

// True if some x0 + k * period lies in [lo - slack, hi + slack].
bool hits_lattice(double lo, double hi, double x0, double period) {
  const double slack = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  const double k0 = std::floor((lo - slack - x0) / period);
  for (int j = 0; j < 3; ++j) {
    const double p = x0 + (k0 + j) * period;
    if (p >= lo - slack && p <= hi + slack) return true;
  }
  return false;
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  return widened(a.lo + b.lo, a.hi + b.hi, 1);
}

Interval operator-(const Interval& a, const Interval& b) {
  return widened(a.lo - b.hi, a.hi - b.lo, 1);
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p[4] = {mul_or_zero(a.lo, b.lo), mul_or_zero(a.lo, b.hi),
                       mul_or_zero(a.hi, b.lo), mul_or_zero(a.hi, b.hi)};
  const auto [mn, mx] = std::minmax({p[0], p[1], p[2], p[3]});
  return widened(mn, mx, 1);
}

Interval operator*(double s, const Interval& a) { return Interval(s) * a; }

Interval sqr(const Interval& a) {
  const double m = a.mig();
  const double M = a.mag();
  return {std::max(0.0, round_down(m * m)), round_up(M * M)};
}

Interval abs(const Interval& a) { return {a.mig(), a.mag()}; }

Interval sqrt(const Interval& a) {
  const double lo = a.lo <= 0.0 ? 0.0 : std::max(0.0, round_down(std::sqrt(a.lo)));
  const double hi = a.hi <= 0.0 ? 0.0 : round_up(std::sqrt(a.hi));
  return {lo, hi};
}

Interval exp(const Interval& a) {
  return {std::max(0.0, round_down(std::exp(a.lo), kLibmUlps)), round_up(std::exp(a.hi), kLibmUlps)};
}

Interval log(const Interval& a) {
  const double lo = a.lo <= 0.0 ? -kInf : round_down(std::log(a.lo), kLibmUlps);
  const double hi = a.hi <= 0.0 ? -kInf : round_up(std::log(a.hi), kLibmUlps);
  return {lo, hi};
}

Interval sin(const Interval& a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || a.width() >= two_pi) return {-1.0, 1.0};
  const double s0 = std::sin(a.lo);
  const double s1 = std::sin(a.hi);
  double lo = round_down(std::min(s0, s1), kLibmUlps);
  double hi = round_up(std::max(s0, s1), kLibmUlps);
  if (hits_lattice(a.lo, a.hi, std::numbers::pi / 2, two_pi)) hi = 1.0;
  if (hits_lattice(a.lo, a.hi, -std::numbers::pi / 2, two_pi)) lo = -1.0;
  return {std::max(-1.0, lo), std::min(1.0, hi)};
}

Interval cos(const Interval& a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || a.width() >= two_pi) return {-1.0, 1.0};
  const double c0 = std::cos(a.lo);
  const double c1 = std::cos(a.hi);
  double lo = round_down(std::min(c0, c1), kLibmUlps);
  double hi = round_up(std::max(c0, c1), kLibmUlps);
  if (hits_lattice(a.lo, a.hi, 0.0, two_pi)) hi = 1.0;
  if (hits_lattice(a.lo, a.hi, std::numbers::pi, two_pi)) lo = -1.0;
  return {std::max(-1.0, lo), std::min(1.0, hi)};
}

double log_sinh(double t) {
  if (t <= 0.0) return -kInf;
  if (t < 1e-8) return std::log(t);
  if (t < 20.0) return std::log(std::sinh(t));
  return t - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * t));
}

Interval log_sinh(const Interval& t) {
  const double lo = t.lo <= 0.0 ? -kInf : round_down(log_sinh(t.lo), 4);
  const double hi = t.hi <= 0.0 ? -kInf : round_up(log_sinh(t.hi), 4);
  return {lo, hi};
}

}  // namespace areagrowth
