#include "areagrowth/growth_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "areagrowth/error.hpp"

namespace areagrowth {
namespace {

constexpr double kWitnessGrain = 1e-3;

void validate_samples(std::span<const GrowthSample> samples) {
  if (samples.size() < 4) throw Error(ErrorKind::InsufficientSamples, "at least 4 samples are required");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!(s.r > 0.0) || !std::isfinite(s.r)) throw Error(ErrorKind::InvalidArgument, "sample r must be > 0");
    if (!(s.area_lower > 0.0) || !std::isfinite(s.area_lower)) {
      throw Error(ErrorKind::NonPositiveArea, "sample areas must be positive and finite");
    }
    if (i > 0 && !(samples[i - 1].r < s.r)) {
      throw Error(ErrorKind::InvalidArgument, "sample r must be strictly increasing");
    }
  }
}

bool holds_for(std::span<const GrowthSample> samples, GrowthModel model, std::size_t i0, double c) {
  const double m0 = model_coordinate(model, samples[i0].r);
  const double log_a0 = std::log(samples[i0].area_lower);
  for (std::size_t i = i0 + 1; i < samples.size(); ++i) {
    const double m = model_coordinate(model, samples[i].r);
    if (std::log(samples[i].area_lower) < log_a0 + c * (m - m0)) return false;
  }
  return true;
}

}  // namespace

std::string_view model_name(GrowthModel model) noexcept {
  switch (model) {
    case GrowthModel::Polynomial: return "polynomial";
    case GrowthModel::Exponential: return "exponential";
    case GrowthModel::Gaussian: return "gaussian";
  }
  return "?";
}

std::optional<GrowthModel> parse_model(std::string_view name) noexcept {
  if (name == "polynomial") return GrowthModel::Polynomial;
  if (name == "exponential") return GrowthModel::Exponential;
  if (name == "gaussian") return GrowthModel::Gaussian;
  return std::nullopt;
}

std::string_view source_name(SampleSource source) noexcept {
  switch (source) {
    case SampleSource::Quadrature: return "quadrature";
    case SampleSource::Packets: return "packets";
    case SampleSource::Schedule: return "schedule";
  }
  return "?";
}

std::optional<SampleSource> parse_source(std::string_view name) noexcept {
  if (name == "quadrature") return SampleSource::Quadrature;
  if (name == "packets") return SampleSource::Packets;
  if (name == "schedule") return SampleSource::Schedule;
  return std::nullopt;
}

double model_coordinate(GrowthModel model, double r) {
  switch (model) {
    case GrowthModel::Polynomial: return std::log(r);
    case GrowthModel::Exponential: return r;
    case GrowthModel::Gaussian: return r * r;
  }
  return r;
}

GrowthFit fit_growth(std::span<const GrowthSample> samples, GrowthModel model) {
  validate_samples(samples);
  const auto n = static_cast<double>(samples.size());
  std::vector<double> t(samples.size());
  std::vector<double> y(samples.size());
  double mt = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    t[i] = model_coordinate(model, samples[i].r);
    y[i] = std::log(samples[i].area_lower);
    mt += t[i];
    my += y[i];
  }
  mt /= n;
  my /= n;
  double stt = 0.0;
  double sty = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    stt += (t[i] - mt) * (t[i] - mt);
    sty += (t[i] - mt) * (y[i] - my);
  }
  GrowthFit fit;
  fit.model = model;
  fit.rate = sty / stt;
  fit.log_intercept = my - fit.rate * mt;
  double ss = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double e = y[i] - (fit.log_intercept + fit.rate * t[i]);
    ss += e * e;
  }
  fit.residual_rms = std::sqrt(ss / n);
  fit.r_range = {samples.front().r, samples.back().r};
  return fit;
}

GrowthFit classify_growth(std::span<const GrowthSample> samples) {
  const std::array<GrowthModel, 3> order = {GrowthModel::Polynomial, GrowthModel::Exponential,
                                            GrowthModel::Gaussian};
  std::optional<GrowthFit> best;
  for (GrowthModel m : order) {
    const GrowthFit f = fit_growth(samples, m);
    if (!best) {
      best = f;
      continue;
    }
    const double tie = 1e-12 + 1e-9 * best->residual_rms;
    if (f.residual_rms < best->residual_rms - tie) best = f;
  }
  return *best;
}

GrowthWitness witness_constants(std::span<const GrowthSample> samples, GrowthModel model) {
  validate_samples(samples);
  // Need at least one constraint after r0.
  for (std::size_t i0 = 0; i0 + 1 < samples.size(); ++i0) {
    if (!holds_for(samples, model, i0, kWitnessGrain)) continue;
    // Bracket the feasible grid index, then bisect.
    std::int64_t lo = 1;
    std::int64_t hi = 2;
    while (holds_for(samples, model, i0, static_cast<double>(hi) * kWitnessGrain)) {
      lo = hi;
      hi *= 2;
      if (hi > (std::int64_t{1} << 50)) break;
    }
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (holds_for(samples, model, i0, static_cast<double>(mid) * kWitnessGrain) ? lo : hi) = mid;
    }
    GrowthWitness w;
    w.c = static_cast<double>(lo) * kWitnessGrain;
    w.r0 = samples[i0].r;
    w.log_prefactor = std::log(samples[i0].area_lower) - w.c * model_coordinate(model, w.r0);
    return w;
  }
  throw Error(ErrorKind::NoWitness, "no positive growth constant fits the samples");
}

bool witness_holds(std::span<const GrowthSample> samples, GrowthModel model, const GrowthWitness& w) {
  if (!(w.c > 0.0)) return false;
  for (const auto& s : samples) {
    if (s.r < w.r0) continue;
    const double bound = w.log_prefactor + w.c * model_coordinate(model, s.r);
    if (std::log(s.area_lower) < bound - 1e-12 * (1.0 + std::abs(bound))) return false;
  }
  return true;
}

}  // namespace areagrowth
