#pragma once

#include <cstdint>
#include <optional>

#include "areagrowth/complex_core.hpp"

namespace areagrowth {

/// Omega_r = { z : |z|^2 + |f(z)|^2 <= r^2 }, the preimage of the ball B_r under z -> (z, f(z)).
struct SublevelDomain {
  GraphFamily family = GraphFamily::SinExp;
  double r = 1.0;
};

enum class QuadMode { LowerBound, Estimate };

struct QuadConfig {
  int max_depth = 12;
  /// Inside cells are refined until the integrand enclosure is this tight (relative).
  double tol_rel = 0.05;
  double seed_box_pad = 0.25;
  QuadMode mode = QuadMode::LowerBound;
  /// Sample points per leaf cell in Estimate mode (rounded down to a square).
  int samples_per_cell = 4;
  /// Permit radii above radius_cap(family).
  bool override_cap = false;
  /// Worker threads; 0 defers to AREAGROWTH_THREADS, then the hardware count.
  unsigned threads = 0;

  void validate() const;
};

struct AreaEstimate {
  /// Certified lower bound on the graph area inside B_r.
  double lower = 0.0;
  /// Point estimate, Estimate mode only.
  std::optional<double> estimate;
  std::int64_t cells_inside = 0;
  std::int64_t cells_boundary = 0;
  int depth_reached = 0;
  /// Warning: the requested tolerance was not met before max_depth.
  bool depth_exceeded = false;
};

enum class CellClass { Inside, Outside, Boundary, Unknown };

/// Largest radius graph_area accepts without override_cap.
double radius_cap(GraphFamily family) noexcept;

/// Pointwise membership test for Omega_r.
bool in_sublevel(const SublevelDomain& domain, Complex z);

/// Inside and Outside are proofs: the whole cell is in (respectively out of) Omega_r.
CellClass classify_cell(const SublevelDomain& domain, const RectBounds& cell);

/// Area of the graph inside B_r, i.e. the integral of 1 + |f'|^2 over Omega_r.
///
/// The lower bound only counts cells proved Inside, weighted by a rigorous
/// lower bound of the integrand, and is accumulated exactly; results are
/// bit-identical for any thread count. Throws Error(CapExceeded) for
/// r > radius_cap(family) unless cfg.override_cap is set.
AreaEstimate graph_area(const SublevelDomain& domain, const QuadConfig& cfg);

/// Value of the bounding-box integral 2R * int_{-R}^{log(R)/2} (1 + e^{2x}) dx,
/// i.e. R log R + 3R^2 - R e^{-2R}. Requires R >= 2.
double ez_area_closed_bound(double R);

/// Thread count used when a config requests `requested` (0 = automatic).
unsigned resolve_thread_count(unsigned requested);

}  // namespace areagrowth
