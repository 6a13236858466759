#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "areagrowth/error.hpp"
#include "areagrowth/growth_analysis.hpp"
#include "areagrowth/packet_certifier.hpp"
#include "properties.hpp"

using namespace areagrowth;

namespace {
std::vector<GrowthSample> samples_of(const std::vector<double>& r, double (*area)(double)) {
  std::vector<GrowthSample> s;
  for (double x : r) s.push_back({x, area(x), std::nullopt, SampleSource::Quadrature});
  return s;
}
}  // namespace

TEST(Growth, RecoversExactModels) {
  const auto c = props::fit_recovers_exact_models();
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Growth, ModelCoordinates) {
  EXPECT_DOUBLE_EQ(model_coordinate(GrowthModel::Polynomial, 3.0), std::log(3.0));
  EXPECT_DOUBLE_EQ(model_coordinate(GrowthModel::Exponential, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(model_coordinate(GrowthModel::Gaussian, 3.0), 9.0);
  for (auto m : {GrowthModel::Polynomial, GrowthModel::Exponential, GrowthModel::Gaussian}) {
    EXPECT_EQ(parse_model(model_name(m)), m);
  }
  for (auto s : {SampleSource::Quadrature, SampleSource::Packets, SampleSource::Schedule}) {
    EXPECT_EQ(parse_source(source_name(s)), s);
  }
}

TEST(Growth, Errors) {
  const std::vector<double> r3 = {1.0, 2.0, 3.0};
  auto three = samples_of(r3, [](double x) { return x * x; });
  try {
    fit_growth(three, GrowthModel::Polynomial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientSamples);
  }
  auto zero = samples_of({1.0, 2.0, 3.0, 4.0}, [](double x) { return x - 1.0; });
  try {
    classify_growth(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveArea);
  }
  auto unordered = samples_of({1.0, 3.0, 2.0, 4.0}, [](double x) { return x; });
  EXPECT_THROW(fit_growth(unordered, GrowthModel::Exponential), Error);
}

TEST(Growth, NoisyPolynomialClassified) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<GrowthSample> s;
  for (double r = 2.0; r <= 32.0; r *= 1.25) {
    s.push_back({r, 3.0 * r * r * std::exp(noise(rng)), std::nullopt, SampleSource::Quadrature});
  }
  const auto best = classify_growth(s);
  EXPECT_EQ(best.model, GrowthModel::Polynomial);
  EXPECT_NEAR(best.rate, 2.0, 0.05);
}

TEST(Growth, PacketWitnessForExponentialFamily) {
  std::vector<GrowthSample> s;
  for (int r = 6; r <= 14; ++r) {
    s.push_back({double(r), packet_growth_lower_bound(GraphFamily::SinExp, r), std::nullopt,
                 SampleSource::Packets});
  }
  EXPECT_EQ(classify_growth(s).model, GrowthModel::Exponential);
  const auto w = witness_constants(s, GrowthModel::Exponential);
  EXPECT_GE(w.c, 0.5);
  EXPECT_LE(w.c, 1.05);
  EXPECT_LE(w.r0, 6.0);
  EXPECT_TRUE(witness_holds(s, GrowthModel::Exponential, w));
  // A witness that is slightly too steep must be rejected.
  GrowthWitness bad = w;
  bad.c += 0.01;
  EXPECT_FALSE(witness_holds(s, GrowthModel::Exponential, bad));
}

TEST(Growth, NoWitnessForDecreasingData) {
  auto s = samples_of({1.0, 2.0, 3.0, 4.0, 5.0}, [](double x) { return std::exp(-x); });
  try {
    witness_constants(s, GrowthModel::Exponential);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoWitness);
  }
}

TEST(Growth, GaussianPacketsPositiveRate) {
  std::vector<GrowthSample> s;
  for (double r : {2.5, 3.0, 3.5, 4.0}) {
    s.push_back({r, packet_growth_lower_bound(GraphFamily::SinExpSq, r, 0.01), std::nullopt,
                 SampleSource::Packets});
  }
  const auto fit = fit_growth(s, GrowthModel::Gaussian);
  EXPECT_GT(fit.rate, 0.0);
  EXPECT_EQ(fit.r_range.first, 2.5);
  EXPECT_EQ(fit.r_range.second, 4.0);
}
