#pragma once

#include <vector>

namespace areagrowth {

// Exact accumulator for finite doubles (Shewchuk non-overlapping expansions).
//
// The represented value is the exact real sum of everything added, so the
// result is independent of summation order and of how work was partitioned
// across threads. Rounding happens once, on extraction.
class ExactSum {
 public:
  void add(double x);
  void merge(const ExactSum& other);

  [[nodiscard]] double round_nearest() const;
  // Largest double not exceeding the exact sum.
  [[nodiscard]] double round_down() const;
  // Smallest double not below the exact sum.
  [[nodiscard]] double round_up() const;
  // Sign of the exact sum: -1, 0 or 1.
  [[nodiscard]] int sign() const;

  [[nodiscard]] bool empty() const { return partials_.empty(); }

 private:
  std::vector<double> partials_;
};

}  // namespace areagrowth
