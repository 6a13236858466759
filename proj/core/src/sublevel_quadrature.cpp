#include "areagrowth/sublevel_quadrature.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "areagrowth/error.hpp"
#include "areagrowth/exact_sum.hpp"

namespace areagrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSplitDepth = 3;

struct IntegrandBound {
  double lo = 1.0;
  double hi = kInf;
};

// 1 + |f'|^2 over the cell.
IntegrandBound integrand_bound(GraphFamily family, const RectBounds& cell) {
  const MagInterval fp = bound_abs_fprime(family, cell);
  IntegrandBound b;
  const double lo = fp.lo();
  b.lo = round_down(1.0 + round_down(lo * lo));
  const double hi = fp.hi();
  b.hi = std::isfinite(hi) ? round_up(1.0 + round_up(hi * hi)) : kInf;
  return b;
}

double integrand_at(GraphFamily family, Complex z) {
  const LogScaledComplex fp = eval_fprime(family, z);
  if (fp.is_zero()) return 1.0;
  return 1.0 + std::exp(2.0 * fp.log_mag);
}

// Gauss-Legendre nodes and weights on [-1, 1] via Newton on the three-term recurrence.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int k) {
  GaussRule g;
  g.nodes.resize(k);
  g.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pk = k == 1 ? x : p1;
      const double pkm1 = k == 1 ? 1.0 : p0;
      dp = k * (x * pk - pkm1) / (x * x - 1.0);
      const double dx = pk / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.nodes[i] = x;
    g.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

struct Accumulator {
  ExactSum lower;
  ExactSum estimate;
  ExactSum boundary_estimate;
  std::int64_t inside = 0;
  std::int64_t boundary = 0;
  int depth = 0;
  bool depth_exceeded = false;

  void merge(const Accumulator& o) {
    lower.merge(o.lower);
    estimate.merge(o.estimate);
    boundary_estimate.merge(o.boundary_estimate);
    inside += o.inside;
    boundary += o.boundary;
    depth = std::max(depth, o.depth);
    depth_exceeded = depth_exceeded || o.depth_exceeded;
  }
};

struct Task {
  RectBounds cell;
  int depth;
  std::optional<double> resolved_lo;
};

class QuadtreeWalker {
 public:
  QuadtreeWalker(const SublevelDomain& domain, const QuadConfig& cfg)
      : domain_(domain), cfg_(cfg) {
    side_ = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(cfg.samples_per_cell))));
    rule_ = gauss_legendre(side_);
  }

  // Walks the subtree rooted at `cell`. When `tasks` is non-null, subtrees at
  // kSplitDepth are deferred there instead of being visited.
  void visit(const RectBounds& cell, int depth, std::optional<double> resolved_lo,
             Accumulator& acc, std::vector<Task>* tasks) const {
    acc.depth = std::max(acc.depth, depth);
    const CellClass cls = classify_cell(domain_, cell);
    if (cls == CellClass::Outside) return;

    // The integrand resolution level depends on the cell, not on r, which keeps
    // the lower bound monotone in r.
    IntegrandBound ib;
    if (!resolved_lo) {
      ib = integrand_bound(domain_.family, cell);
      if (ib.hi - ib.lo <= cfg_.tol_rel * ib.lo) resolved_lo = ib.lo;
    }

    const bool at_max = depth >= cfg_.max_depth;
    if (cls == CellClass::Inside && (resolved_lo || at_max)) {
      const double lo = resolved_lo ? *resolved_lo : ib.lo;
      const double area = cell.area();  // exact on the dyadic grid
      acc.lower.add(round_down(lo * area));
      ++acc.inside;
      if (!resolved_lo) acc.depth_exceeded = true;
      if (cfg_.mode == QuadMode::Estimate) acc.estimate.add(gauss_estimate(cell));
      return;
    }
    if (at_max) {
      ++acc.boundary;
      if (cfg_.mode == QuadMode::Estimate) {
        const double e = boundary_estimate(cell);
        acc.estimate.add(e);
        acc.boundary_estimate.add(e);
      }
      return;
    }
    if (tasks && depth == kSplitDepth) {
      tasks->push_back({cell, depth, resolved_lo});
      return;
    }
    const double xm = 0.5 * (cell.re_lo + cell.re_hi);
    const double ym = 0.5 * (cell.im_lo + cell.im_hi);
    const std::array<RectBounds, 4> children = {{
        {cell.re_lo, xm, cell.im_lo, ym},
        {xm, cell.re_hi, cell.im_lo, ym},
        {cell.re_lo, xm, ym, cell.im_hi},
        {xm, cell.re_hi, ym, cell.im_hi},
    }};
    for (const auto& child : children) visit(child, depth + 1, resolved_lo, acc, tasks);
  }

 private:
  double gauss_estimate(const RectBounds& cell) const {
    const Complex c = cell.center();
    const double hx = 0.5 * cell.width();
    const double hy = 0.5 * cell.height();
    double sum = 0.0;
    for (int i = 0; i < side_; ++i) {
      for (int j = 0; j < side_; ++j) {
        const Complex z{c.real() + hx * rule_.nodes[i], c.imag() + hy * rule_.nodes[j]};
        sum += rule_.weights[i] * rule_.weights[j] * integrand_at(domain_.family, z);
      }
    }
    return sum * hx * hy;
  }

  double boundary_estimate(const RectBounds& cell) const {
    const double dx = cell.width() / side_;
    const double dy = cell.height() / side_;
    double sum = 0.0;
    for (int i = 0; i < side_; ++i) {
      for (int j = 0; j < side_; ++j) {
        const Complex z{cell.re_lo + (i + 0.5) * dx, cell.im_lo + (j + 0.5) * dy};
        if (in_sublevel(domain_, z)) sum += integrand_at(domain_.family, z);
      }
    }
    return sum * dx * dy;
  }

  SublevelDomain domain_;
  QuadConfig cfg_;
  int side_ = 2;
  GaussRule rule_;
};

}  // namespace

void QuadConfig::validate() const {
  if (max_depth < 1) throw Error(ErrorKind::InvalidArgument, "max_depth must be >= 1");
  if (!(tol_rel > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol_rel must be > 0");
  if (!(seed_box_pad >= 0.0) || !std::isfinite(seed_box_pad)) {
    throw Error(ErrorKind::InvalidArgument, "seed_box_pad must be finite and >= 0");
  }
  if (samples_per_cell < 4) throw Error(ErrorKind::InvalidArgument, "samples_per_cell must be >= 4");
  if (max_depth > 40) throw Error(ErrorKind::InvalidArgument, "max_depth must be <= 40");
}

double radius_cap(GraphFamily family) noexcept {
  switch (family) {
    case GraphFamily::SinExp: return 8.0;
    case GraphFamily::SinExpSq: return 3.0;
    case GraphFamily::Exp: return 64.0;
  }
  return 0.0;
}

bool in_sublevel(const SublevelDomain& domain, Complex z) {
  const double z2 = std::norm(z);
  const double r2 = domain.r * domain.r;
  if (z2 > r2) return false;
  const LogScaledComplex f = eval_f(domain.family, z);
  if (f.is_zero()) return true;
  if (f.log_mag > std::log(domain.r) + 1.0) return false;
  const double fm = std::exp(f.log_mag);
  return z2 + fm * fm <= r2;
}

CellClass classify_cell(const SublevelDomain& domain, const RectBounds& cell) {
  cell.validate();
  const double r = domain.r;
  const Interval x = cell.re();
  const Interval y = cell.im();
  const Interval z2 = sqr(x) + sqr(y);
  const double r2_lo = round_down(r * r);
  const double r2_hi = round_up(r * r);
  if (z2.lo > r2_hi) return CellClass::Outside;

  const MagInterval f = bound_abs_f(domain.family, cell);
  if (f.is_trivial()) return CellClass::Unknown;

  const double f_lo = f.lo();
  const double f_hi = f.hi();
  const double lo_total = round_down(z2.lo + round_down(f_lo * f_lo));
  if (lo_total > r2_hi) return CellClass::Outside;
  if (std::isfinite(f_hi)) {
    const double hi_total = round_up(z2.hi + round_up(f_hi * f_hi));
    if (hi_total <= r2_lo) return CellClass::Inside;
  }
  return CellClass::Boundary;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("AREAGROWTH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

AreaEstimate graph_area(const SublevelDomain& domain, const QuadConfig& cfg) {
  cfg.validate();
  const double r = domain.r;
  if (!std::isfinite(r) || r < 0.0) throw Error(ErrorKind::InvalidArgument, "r must be finite and >= 0");
  if (r > radius_cap(domain.family) && !cfg.override_cap) {
    throw Error(ErrorKind::CapExceeded, "r=" + std::to_string(r) + " exceeds the cap for " +
                                            std::string(family_name(domain.family)));
  }
  AreaEstimate out;
  if (cfg.mode == QuadMode::Estimate) out.estimate = 0.0;
  if (r == 0.0) return out;

  // Half-width rounded up to a multiple of 1/8 so every subdivision is exact.
  const double half = std::ceil((r + cfg.seed_box_pad) * 8.0) / 8.0;
  const RectBounds seed{-half, half, -half, half};

  const QuadtreeWalker walker(domain, cfg);
  Accumulator total;
  std::vector<Task> tasks;
  walker.visit(seed, 0, std::nullopt, total, &tasks);

  std::vector<Accumulator> partial(tasks.size());
  const unsigned n_threads =
      std::min<unsigned>(resolve_thread_count(cfg.threads), std::max<std::size_t>(1, tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      walker.visit(tasks[i].cell, tasks[i].depth, tasks[i].resolved_lo, partial[i], nullptr);
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& p : partial) total.merge(p);

  out.lower = total.lower.round_down();
  out.cells_inside = total.inside;
  out.cells_boundary = total.boundary;
  out.depth_reached = total.depth;
  out.depth_exceeded = total.depth_exceeded;
  if (cfg.mode == QuadMode::Estimate) {
    const double est = std::max(out.lower, total.estimate.round_nearest());
    out.estimate = est;
    if (total.boundary_estimate.round_nearest() > cfg.tol_rel * est) out.depth_exceeded = true;
  }
  return out;
}

double ez_area_closed_bound(double R) {
  if (!(R >= 2.0) || !std::isfinite(R)) throw Error(ErrorKind::InvalidArgument, "requires R >= 2");
  return R * std::log(R) + 3.0 * R * R - R * std::exp(-2.0 * R);
}

}  // namespace areagrowth
