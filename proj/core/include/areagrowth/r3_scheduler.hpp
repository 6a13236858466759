#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace areagrowth {

enum class RadiiVariant {
  ExpRadii,       ///< r_n = theta log(n + n0)
  GaussianRadii,  ///< r_n = sqrt(log(n + n0) / d)
};

std::string_view variant_name(RadiiVariant v) noexcept;
std::optional<RadiiVariant> parse_variant(std::string_view name) noexcept;

struct ScheduleConfig {
  RadiiVariant variant = RadiiVariant::ExpRadii;
  std::int64_t n0 = 10000;
  double d = 1.0;
  double theta = 1.0;
  /// Area guaranteed per stage packet.
  double a0 = std::numbers::pi / 4096.0;
  std::int64_t N = 100;

  void validate() const;
};

/// One induction stage. sigma_n is NaN when the sigma equation has no positive root.
struct ScheduleRow {
  std::int64_t n = 0;
  double r_n = 0.0;
  double mu_n = 0.0;
  double a_n = 0.0;
  double b_n = 0.0;
  double eps_n = 0.0;
  double sigma_n = 0.0;
  double eta_n = 0.0;
  bool hyp2_ok = false;
  bool sigma_feasible = false;
  /// Relative residual of the back-substituted sigma equation (0 when infeasible).
  double sigma_residual = 0.0;
};

struct ScheduleDiagnostics {
  std::vector<double> sigma_partial_sums;
  double eta_max_tail = 0.0;
  std::vector<std::pair<double, std::int64_t>> n_of_r;
  std::vector<std::pair<double, double>> area_lower_of_r;
  bool all_hyp2_ok = true;
  bool all_sigma_feasible = true;
  double max_sigma_residual = 0.0;
};

struct CompletenessTrend {
  /// Least-squares slope of log sigma_n against log(n + index_offset).
  double exponent = 0.0;
  /// exponent > -1, i.e. sum of sigma_n diverges.
  bool diverging = false;
  /// max / min of sigma_n sqrt(n) over the last half of the feasible rows.
  double scaled_spread = 0.0;
};

/// Positive root sigma of
///   sqrt((r + a)^2 + (2 sigma + a)^2) - r + eps_next = half_dist,
/// or nullopt when none exists. Throws Error(InvalidArgument) on bad inputs.
std::optional<double> solve_sigma(double r, double a, double eps_next, double half_dist);

/// |LHS - half_dist| / half_dist for the sigma equation, evaluated without cancellation.
double sigma_equation_residual(double r, double a, double eps_next, double half_dist, double sigma);

/// sqrt((a + r)^2 + a^2) - r + eps < dist / 2, the ball case of the convex-body hypothesis.
bool check_hyp2(double r, double a, double eps, double dist);

double stage_radius(const ScheduleConfig& cfg, std::int64_t n);
/// r_{n+1} - r_n computed without cancellation.
double stage_gap(const ScheduleConfig& cfg, std::int64_t n);
/// Default a_n = b_n = eps_n.
double small_parameter(const ScheduleConfig& cfg, std::int64_t n);
/// Upper bound on sum_{k > N} eps_k.
double tail_remainder(const ScheduleConfig& cfg);

std::vector<ScheduleRow> build_schedule(const ScheduleConfig& cfg);

/// N(R) = max{n : r_{n+1} + eta_n <= R}, 0 if no stage fits.
std::int64_t packets_within(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg, double R);

/// [r_2 + eta_1, r_{N+1} + eta_N]: radii for which N(R) is determined by the rows.
std::pair<double, double> queryable_range(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg);

/// `count` equally spaced radii across queryable_range.
std::vector<double> default_queries(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg,
                                    int count);

ScheduleDiagnostics diagnostics(std::span<const ScheduleRow> rows, const ScheduleConfig& cfg,
                                std::span<const double> radii_query);

/// Throws Error(InsufficientRows) with fewer than 20 feasible rows.
CompletenessTrend completeness_trend(std::span<const ScheduleRow> rows, std::int64_t index_offset = 0);

}  // namespace areagrowth
