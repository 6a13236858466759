#include "areagrowth/r3_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "areagrowth/error.hpp"

namespace areagrowth {
namespace {

constexpr double kSigmaTolerance = 1e-12;

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

double cube_inverse(std::int64_t m) {
  const auto x = static_cast<double>(m);
  return 1.0 / (x * x * x);
}

// sqrt(p^2 + q^2) - p for p > 0, q >= 0, without cancellation.
double hypot_excess(double p, double q) { return q * q / (std::hypot(p, q) + p); }

}  // namespace

std::string_view variant_name(RadiiVariant v) noexcept {
  return v == RadiiVariant::ExpRadii ? "exp" : "gaussian";
}

std::optional<RadiiVariant> parse_variant(std::string_view name) noexcept {
  if (name == "exp") return RadiiVariant::ExpRadii;
  if (name == "gaussian") return RadiiVariant::GaussianRadii;
  return std::nullopt;
}

void ScheduleConfig::validate() const {
  if (n0 < 1) throw Error(ErrorKind::InvalidArgument, "n0 must be >= 1");
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be >= 1");
  if (!finite_positive(theta)) throw Error(ErrorKind::InvalidArgument, "theta must be finite and > 0");
  if (!finite_positive(a0)) throw Error(ErrorKind::InvalidArgument, "a0 must be finite and > 0");
  if (variant == RadiiVariant::GaussianRadii && !finite_positive(d)) {
    throw Error(ErrorKind::InvalidArgument, "d must be finite and > 0");
  }
}

std::optional<double> solve_sigma(double r, double a, double eps_next, double half_dist) {
  if (!finite_positive(r) || !finite_positive(half_dist) || !(a >= 0.0) || !(eps_next >= 0.0) ||
      !std::isfinite(a) || !std::isfinite(eps_next)) {
    throw Error(ErrorKind::InvalidArgument, "solve_sigma: need r, half_dist > 0 and a, eps >= 0");
  }
  // (2 sigma + a)^2 = p^2 - q^2 with p = half_dist - eps + r, q = r + a.
  const double p = half_dist - eps_next + r;
  if (!(p > 0.0)) return std::nullopt;
  const double p_minus_q = half_dist - eps_next - a;
  const double radicand = p_minus_q * (p + r + a);
  if (!(radicand > a * a)) return std::nullopt;
  const double sigma = 0.5 * (std::sqrt(radicand) - a);
  if (!(sigma > 0.0)) return std::nullopt;
  if (sigma_equation_residual(r, a, eps_next, half_dist, sigma) > kSigmaTolerance) {
    throw Error(ErrorKind::InvalidArgument, "solve_sigma: back-substitution failed");
  }
  return sigma;
}

double sigma_equation_residual(double r, double a, double eps_next, double half_dist, double sigma) {
  // sqrt((r+a)^2 + t^2) - r = a + [sqrt((r+a)^2 + t^2) - (r+a)]
  const double lhs = a + hypot_excess(r + a, 2.0 * sigma + a) + eps_next;
  return std::abs(lhs - half_dist) / half_dist;
}

bool check_hyp2(double r, double a, double eps, double dist) {
  if (!finite_positive(r) || !finite_positive(dist) || !(a >= 0.0) || !(eps >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "check_hyp2: need r, dist > 0 and a, eps >= 0");
  }
  const double lhs = a + hypot_excess(a + r, a) + eps;
  return lhs < 0.5 * dist;
}

double stage_radius(const ScheduleConfig& cfg, std::int64_t n) {
  const auto m = static_cast<double>(n + cfg.n0);
  if (cfg.variant == RadiiVariant::ExpRadii) return cfg.theta * std::log(m);
  return std::sqrt(std::log(m) / cfg.d);
}

double stage_gap(const ScheduleConfig& cfg, std::int64_t n) {
  const double l1 = std::log1p(1.0 / static_cast<double>(n + cfg.n0));
  if (cfg.variant == RadiiVariant::ExpRadii) return cfg.theta * l1;
  return (l1 / cfg.d) / (stage_radius(cfg, n + 1) + stage_radius(cfg, n));
}

double small_parameter(const ScheduleConfig& cfg, std::int64_t n) {
  const double base = cube_inverse(n + cfg.n0);
  if (cfg.variant == RadiiVariant::ExpRadii) return base;
  const auto dn = static_cast<double>(n);
  return base / (dn * std::sqrt(std::log(dn + 2.0)));
}

double tail_remainder(const ScheduleConfig& cfg) {
  // sum_{k > N} (k + n0)^{-3} <= int_N^inf (x + n0)^{-3} dx = (N + n0)^{-2} / 2
  const auto m = static_cast<double>(cfg.N + cfg.n0);
  const double cube_tail = 0.5 / (m * m);
  if (cfg.variant == RadiiVariant::ExpRadii) return cube_tail;
  const auto dN = static_cast<double>(cfg.N);
  return cube_tail / (dN * std::sqrt(std::log(dN + 2.0)));
}

std::vector<ScheduleRow> build_schedule(const ScheduleConfig& cfg) {
  cfg.validate();
  const auto count = static_cast<std::size_t>(cfg.N);
  std::vector<ScheduleRow> rows(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    ScheduleRow& row = rows[i];
    row.n = n;
    row.r_n = stage_radius(cfg, n);
    row.mu_n = stage_gap(cfg, n);
    row.a_n = row.b_n = row.eps_n = small_parameter(cfg, n);
    const double eps_next = small_parameter(cfg, n + 1);
    if (const auto s = solve_sigma(row.r_n, row.a_n, eps_next, 0.5 * row.mu_n)) {
      row.sigma_n = *s;
      row.sigma_feasible = true;
      row.sigma_residual = sigma_equation_residual(row.r_n, row.a_n, eps_next, 0.5 * row.mu_n, *s);
    } else {
      row.sigma_n = std::numeric_limits<double>::quiet_NaN();
    }
    row.hyp2_ok = check_hyp2(row.r_n, row.a_n, row.eps_n, row.mu_n);
  }
  // eta_n = 2 (a_n + b_{n+1}) + sum_{k >= n} eps_k, summed from the tail.
  double tail = tail_remainder(cfg);
  for (std::size_t i = count; i-- > 0;) {
    tail += rows[i].eps_n;
    const double b_next = i + 1 < count ? rows[i + 1].b_n : small_parameter(cfg, rows[i].n + 1);
    rows[i].eta_n = 2.0 * (rows[i].a_n + b_next) + tail;
  }
  return rows;
}

std::int64_t packets_within(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg, double R) {
  for (std::size_t i = rows.size(); i-- > 0;) {
    const double r_next = i + 1 < rows.size() ? rows[i + 1].r_n : stage_radius(cfg, rows[i].n + 1);
    if (r_next + rows[i].eta_n <= R) return rows[i].n;
  }
  return 0;
}

std::pair<double, double> queryable_range(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg) {
  if (rows.empty()) throw Error(ErrorKind::InsufficientRows, "empty schedule");
  const double lo = (rows.size() > 1 ? rows[1].r_n : stage_radius(cfg, 2)) + rows.front().eta_n;
  const double hi = stage_radius(cfg, rows.back().n + 1) + rows.back().eta_n;
  return {lo, hi};
}

std::vector<double> default_queries(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg,
                                    int count) {
  const auto [lo, hi] = queryable_range(rows, cfg);
  std::vector<double> q;
  if (count <= 1) return {hi};
  q.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    q.push_back(i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  }
  return q;
}

ScheduleDiagnostics diagnostics(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg,
                                std::span<const double> radii_query) {
  ScheduleDiagnostics out;
  out.sigma_partial_sums.reserve(rows.size());
  double acc = 0.0;
  for (const auto& row : rows) {
    if (row.sigma_feasible) acc += row.sigma_n;
    out.sigma_partial_sums.push_back(acc);
    out.all_hyp2_ok = out.all_hyp2_ok && row.hyp2_ok;
    out.all_sigma_feasible = out.all_sigma_feasible && row.sigma_feasible;
    out.max_sigma_residual = std::max(out.max_sigma_residual, row.sigma_residual);
  }
  // Last quartile of the rows.
  for (std::size_t i = rows.size() * 3 / 4; i < rows.size(); ++i) {
    out.eta_max_tail = std::max(out.eta_max_tail, rows[i].eta_n);
  }
  for (double R : radii_query) {
    const std::int64_t n = packets_within(rows, cfg, R);
    out.n_of_r.emplace_back(R, n);
    out.area_lower_of_r.emplace_back(R, cfg.a0 * static_cast<double>(n));
  }
  return out;
}

CompletenessTrend completeness_trend(std::span<const ScheduleRow> rows, std::int64_t index_offset) {
  std::vector<const ScheduleRow*> ok;
  for (const auto& row : rows) {
    if (row.sigma_feasible && row.sigma_n > 0.0) ok.push_back(&row);
  }
  if (ok.size() < 20) throw Error(ErrorKind::InsufficientRows, "need at least 20 feasible rows");
  const auto m = static_cast<double>(ok.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto* row : ok) {
    mx += std::log(static_cast<double>(row->n + index_offset));
    my += std::log(row->sigma_n);
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto* row : ok) {
    const double dx = std::log(static_cast<double>(row->n + index_offset)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(row->sigma_n) - my);
  }
  CompletenessTrend t;
  t.exponent = sxy / sxx;
  t.diverging = t.exponent > -1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = ok.size() / 2; i < ok.size(); ++i) {
    const double v = ok[i]->sigma_n * std::sqrt(static_cast<double>(ok[i]->n));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  t.scaled_spread = hi / lo;
  return t;
}

}  // namespace areagrowth
