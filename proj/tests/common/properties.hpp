#pragma once

// Property checks shared by the unit tests and the acceptance runner.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "areagrowth/complex_core.hpp"
#include "areagrowth/growth_analysis.hpp"
#include "areagrowth/sublevel_quadrature.hpp"

namespace areagrowth::props {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(std::string msg) {
    if (ok) detail = std::move(msg);
    ok = false;
  }
};

using LComplex = std::complex<long double>;

// Extended-precision reference values, computed without any of the library code.
inline LComplex ref_f(GraphFamily family, LComplex z) {
  switch (family) {
    case GraphFamily::SinExp: return std::sin(std::exp(z));
    case GraphFamily::SinExpSq: return std::sin(std::exp(z * z));
    case GraphFamily::Exp: return std::exp(z);
  }
  return {};
}

inline LComplex ref_fprime(GraphFamily family, LComplex z) {
  switch (family) {
    case GraphFamily::SinExp: return std::cos(std::exp(z)) * std::exp(z);
    case GraphFamily::SinExpSq: return 2.0L * z * std::exp(z * z) * std::cos(std::exp(z * z));
    case GraphFamily::Exp: return std::exp(z);
  }
  return {};
}

// Region sampled for each family; large enough to reach |f| ~ e^100 for sin(e^z).
inline RectBounds sample_region(GraphFamily family) {
  switch (family) {
    case GraphFamily::SinExp: return {-4.0, 5.0, -4.0, 4.0};
    case GraphFamily::SinExpSq: return {-2.2, 2.2, -2.2, 2.2};
    case GraphFamily::Exp: return {-8.0, 8.0, -5.0, 5.0};
  }
  return {};
}

inline std::string fmt_c(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", z.real(), z.imag());
  return buf;
}

inline bool within(const MagInterval& m, long double v) {
  // Tolerance covers the reference's own rounding only.
  const long double tol = 1e-15L * (1.0L + v);
  return static_cast<long double>(m.lo()) <= v + tol && v - tol <= static_cast<long double>(m.hi());
}

// `cells` random cells, each tested at its corners, centre and 5 interior points,
// plus `cells` degenerate point cells.
inline Check enclosure_soundness(GraphFamily family, int cells, std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  const RectBounds reg = sample_region(family);
  std::uniform_real_distribution<double> ux(reg.re_lo, reg.re_hi);
  std::uniform_real_distribution<double> uy(reg.im_lo, reg.im_hi);
  std::uniform_real_distribution<double> lw(std::log(1e-6), std::log(0.5));
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 2 * cells; ++i) {
    RectBounds cell;
    if (i < cells) {
      const double x = ux(rng);
      const double y = uy(rng);
      cell = {x, x + std::exp(lw(rng)), y, y + std::exp(lw(rng))};
    } else {
      cell = RectBounds::point({ux(rng), uy(rng)});
    }
    const MagInterval bf = bound_abs_f(family, cell);
    const MagInterval bd = bound_abs_fprime(family, cell);
    if (!(bf.log_lo <= bf.log_hi) || !(bd.log_lo <= bd.log_hi)) {
      c.fail("empty enclosure at " + fmt_c(cell.center()));
      return c;
    }
    std::vector<std::complex<double>> pts = {{cell.re_lo, cell.im_lo}, {cell.re_hi, cell.im_lo},
                                             {cell.re_lo, cell.im_hi}, {cell.re_hi, cell.im_hi},
                                             cell.center()};
    for (int k = 0; k < 5; ++k) {
      pts.emplace_back(cell.re_lo + u01(rng) * cell.width(), cell.im_lo + u01(rng) * cell.height());
    }
    for (auto z : pts) {
      const LComplex zl(z.real(), z.imag());
      const long double af = std::abs(ref_f(family, zl));
      const long double ad = std::abs(ref_fprime(family, zl));
      if (std::isfinite(af) && !within(bf, af)) {
        c.fail("|f| outside enclosure at " + fmt_c(z));
        return c;
      }
      if (std::isfinite(ad) && !within(bd, ad)) {
        c.fail("|f'| outside enclosure at " + fmt_c(z));
        return c;
      }
    }
  }
  return c;
}

// Central difference of the library's own f against its f'.
inline Check derivative_vs_difference(GraphFamily family, int points, std::uint64_t seed) {
  Check c;
  std::mt19937_64 rng(seed);
  // Moderate region: the difference quotient loses digits when |f| is huge.
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const double h = 1e-6;
  for (int i = 0; i < points; ++i) {
    const std::complex<double> z(u(rng), u(rng));
    const std::complex<double> d =
        (eval_f(family, z + h).to_complex() - eval_f(family, z - h).to_complex()) / (2.0 * h);
    const std::complex<double> fp = eval_fprime(family, z).to_complex();
    const double scale = std::max(std::abs(fp), 1.0);
    if (std::abs(d - fp) > 1e-4 * scale) {
      c.fail("f' disagrees with the difference quotient at " + fmt_c(z));
      return c;
    }
  }
  return c;
}

inline Check quadrature_monotone_in_r(GraphFamily family, const std::vector<double>& radii,
                                      int depth) {
  Check c;
  QuadConfig cfg;
  cfg.max_depth = depth;
  double prev = 0.0;
  for (double r : radii) {
    const double a = graph_area({family, r}, cfg).lower;
    if (a < prev) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "lower bound decreased at r=%.17g: %.17g < %.17g", r, a, prev);
      c.fail(buf);
    }
    prev = a;
  }
  return c;
}

inline Check quadrature_monotone_in_depth(GraphFamily family, double r, int depth_lo, int depth_hi) {
  Check c;
  double prev = 0.0;
  for (int d = depth_lo; d <= depth_hi; ++d) {
    QuadConfig cfg;
    cfg.max_depth = d;
    const double a = graph_area({family, r}, cfg).lower;
    if (a < prev) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "lower bound decreased at depth %d: %.17g < %.17g", d, a, prev);
      c.fail(buf);
    }
    prev = a;
  }
  return c;
}

// CSV text of an area run; compared byte for byte across thread counts.
inline std::string area_csv(GraphFamily family, const std::vector<double>& radii, QuadConfig cfg) {
  std::string out;
  char buf[256];
  for (double r : radii) {
    const AreaEstimate a = graph_area({family, r}, cfg);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%lld,%lld,%d\n", r, a.lower,
                  a.estimate.value_or(std::nan("")), static_cast<long long>(a.cells_inside),
                  static_cast<long long>(a.cells_boundary), a.depth_reached);
    out += buf;
  }
  return out;
}

inline Check deterministic_across_threads(GraphFamily family, const std::vector<double>& radii,
                                          QuadMode mode, int depth) {
  Check c;
  const std::array<unsigned, 4> threads = {1, 2, 3, 4};
  std::string first;
  for (unsigned t : threads) {
    QuadConfig cfg;
    cfg.max_depth = depth;
    cfg.mode = mode;
    cfg.threads = t;
    const std::string csv = area_csv(family, radii, cfg);
    if (t == threads[0]) {
      first = csv;
    } else if (csv != first) {
      c.fail("output differs with " + std::to_string(t) + " threads");
    }
  }
  return c;
}

// Samples of exactly C exp(rate m(r)) must be fitted back to 1e-9 and classified correctly.
inline Check fit_recovers_exact_models() {
  Check c;
  const std::vector<double> radii = {2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 6.0};
  struct Case {
    GrowthModel model;
    double rate;
    double log_c;
  };
  const std::vector<Case> cases = {{GrowthModel::Polynomial, 2.0, 1.5},
                                   {GrowthModel::Polynomial, 3.25, -0.75},
                                   {GrowthModel::Exponential, 1.0, -8.0},
                                   {GrowthModel::Exponential, 0.4, 2.0},
                                   {GrowthModel::Gaussian, 0.9, -3.0},
                                   {GrowthModel::Gaussian, 0.25, 0.5}};
  for (const Case& k : cases) {
    std::vector<GrowthSample> s;
    for (double r : radii) {
      s.push_back({r, std::exp(k.log_c + k.rate * model_coordinate(k.model, r)), std::nullopt,
                   SampleSource::Quadrature});
    }
    const GrowthFit fit = fit_growth(s, k.model);
    const GrowthFit best = classify_growth(s);
    const bool good = std::abs(fit.rate - k.rate) <= 1e-9 * std::abs(k.rate) &&
                      std::abs(fit.log_intercept - k.log_c) <= 1e-9 * (1.0 + std::abs(k.log_c)) &&
                      best.model == k.model;
    if (!good) {
      c.fail(std::string("fit failed for model ") + std::string(model_name(k.model)));
    }
  }
  return c;
}

}  // namespace areagrowth::props
