#include "areagrowth/exact_sum.hpp"

#include <cmath>
#include <limits>

namespace areagrowth {

void ExactSum::add(double x) {
  std::size_t i = 0;
  for (double y : partials_) {
    if (std::abs(x) < std::abs(y)) std::swap(x, y);
    const double hi = x + y;
    const double lo = y - (hi - x);
    if (lo != 0.0) partials_[i++] = lo;
    x = hi;
  }
  partials_.resize(i);
  partials_.push_back(x);
}

void ExactSum::merge(const ExactSum& other) {
  for (double p : other.partials_) add(p);
}

double ExactSum::round_nearest() const {
  std::size_t n = partials_.size();
  if (n == 0) return 0.0;
  double hi = partials_[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials_[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  // Half-way cases: the remaining partials decide the direction.
  if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    const double yr = x - hi;
    if (y == yr) hi = x;
  }
  return hi;
}

int ExactSum::sign() const {
  // Partials are non-overlapping and sorted by magnitude, so the largest
  // nonzero one carries the sign of the whole sum.
  for (auto it = partials_.rbegin(); it != partials_.rend(); ++it) {
    if (*it > 0.0) return 1;
    if (*it < 0.0) return -1;
  }
  return 0;
}

double ExactSum::round_down() const {
  const double s = round_nearest();
  ExactSum residual = *this;
  residual.add(-s);
  return residual.sign() < 0 ? std::nextafter(s, -std::numeric_limits<double>::infinity()) : s;
}

double ExactSum::round_up() const {
  const double s = round_nearest();
  ExactSum residual = *this;
  residual.add(-s);
  return residual.sign() > 0 ? std::nextafter(s, std::numeric_limits<double>::infinity()) : s;
}

}  // namespace areagrowth
