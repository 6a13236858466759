#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>

namespace areagrowth {

enum class SampleSource { Quadrature, Packets, Schedule };

struct GrowthSample {
  double r = 0.0;
  double area_lower = 0.0;
  std::optional<double> area_estimate;
  SampleSource source = SampleSource::Quadrature;
};

/// Models are linear in (log A) against log r, r and r^2 respectively.
enum class GrowthModel { Polynomial, Exponential, Gaussian };

std::string_view model_name(GrowthModel model) noexcept;
std::optional<GrowthModel> parse_model(std::string_view name) noexcept;
std::string_view source_name(SampleSource source) noexcept;
std::optional<SampleSource> parse_source(std::string_view name) noexcept;

struct GrowthFit {
  GrowthModel model = GrowthModel::Polynomial;
  /// Degree, c, or d0 depending on the model.
  double rate = 0.0;
  double log_intercept = 0.0;
  double residual_rms = 0.0;
  std::pair<double, double> r_range{0.0, 0.0};
};

/// Growth witness: area_lower(r) >= C e^{c m(r)} for every sample with r >= r0,
/// where C = area_lower(r0) e^{-c m(r0)} and m is log r, r or r^2.
struct GrowthWitness {
  double c = 0.0;
  double r0 = 0.0;
  double log_prefactor = 0.0;  ///< log C
};

/// Model coordinate m(r).
double model_coordinate(GrowthModel model, double r);

/// Ordinary least squares of log(area_lower) on m(r).
/// Throws Error(InsufficientSamples) below 4 samples, Error(NonPositiveArea),
/// and Error(InvalidArgument) when r is not strictly increasing.
GrowthFit fit_growth(std::span<const GrowthSample> samples, GrowthModel model);

/// Fits all three models and keeps the smallest residual; near-ties go to the
/// slower-growing model.
GrowthFit classify_growth(std::span<const GrowthSample> samples);

/// Largest c on a 1e-3 grid (binary search) for the smallest sampled r0 that
/// admits a positive c. Throws Error(NoWitness) when none exists.
GrowthWitness witness_constants(std::span<const GrowthSample> samples, GrowthModel model);

/// Re-checks the witness inequality on every sample with r >= r0.
bool witness_holds(std::span<const GrowthSample> samples, GrowthModel model, const GrowthWitness& w);

}  // namespace areagrowth
