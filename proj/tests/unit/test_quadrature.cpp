#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "areagrowth/error.hpp"
#include "areagrowth/packet_certifier.hpp"
#include "areagrowth/sublevel_quadrature.hpp"
#include "properties.hpp"

using namespace areagrowth;

namespace {

// Area for e^z by 1-D quadrature of 2 sqrt(R^2 - x^2 - e^{2x}) (1 + e^{2x}), 30 digits.
struct ExpRef {
  double R;
  double area;
};
constexpr ExpRef kExpRefs[] = {
    {1.0, 1.3084844580694747}, {2.0, 12.406704102203082}, {3.0, 34.427095138857392},
    {4.0, 71.120425440779965}, {8.0, 444.14674657903172}};

QuadConfig with_depth(int d, QuadMode mode = QuadMode::LowerBound) {
  QuadConfig c;
  c.max_depth = d;
  c.mode = mode;
  return c;
}

}  // namespace

TEST(Quadrature, ExpAgainstOneDimensionalReference) {
  for (const auto& ref : kExpRefs) {
    const auto a = graph_area({GraphFamily::Exp, ref.R}, with_depth(11, QuadMode::Estimate));
    ASSERT_TRUE(a.estimate.has_value());
    EXPECT_LE(a.lower, ref.area) << ref.R;
    EXPECT_GT(a.lower, 0.9 * ref.area) << ref.R;
    EXPECT_NEAR(*a.estimate, ref.area, 2e-3 * ref.area) << ref.R;
    EXPECT_GE(*a.estimate, a.lower);
  }
}

TEST(Quadrature, ExpEstimateBelowClosedBoundAtTwo) {
  const auto a = graph_area({GraphFamily::Exp, 2.0}, with_depth(12, QuadMode::Estimate));
  EXPECT_LE(*a.estimate, ez_area_closed_bound(2.0));
}

TEST(Quadrature, ClosedBoundFormula) {
  EXPECT_NEAR(ez_area_closed_bound(2.0), 13.349663083342422, 1e-13);
  EXPECT_NEAR(ez_area_closed_bound(4.0), 53.543835593967952, 1e-12);
  EXPECT_THROW(ez_area_closed_bound(1.5), Error);
}

TEST(Quadrature, ZeroRadius) {
  const auto a = graph_area({GraphFamily::SinExp, 0.0}, QuadConfig{});
  EXPECT_EQ(a.lower, 0.0);
  EXPECT_EQ(a.cells_inside, 0);
}

TEST(Quadrature, HardCap) {
  EXPECT_EQ(radius_cap(GraphFamily::SinExp), 8.0);
  EXPECT_EQ(radius_cap(GraphFamily::SinExpSq), 3.0);
  EXPECT_EQ(radius_cap(GraphFamily::Exp), 64.0);
  try {
    graph_area({GraphFamily::SinExp, 8.5}, QuadConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  QuadConfig c = with_depth(3);
  c.override_cap = true;
  EXPECT_NO_THROW(graph_area({GraphFamily::SinExpSq, 3.1}, c));
}

TEST(Quadrature, ConfigValidation) {
  QuadConfig c;
  c.max_depth = 41;
  EXPECT_THROW(c.validate(), Error);
  c = QuadConfig{};
  c.tol_rel = 0.0;
  EXPECT_THROW(c.validate(), Error);
  c = QuadConfig{};
  c.samples_per_cell = 0;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_THROW(graph_area({GraphFamily::Exp, -1.0}, QuadConfig{}), Error);
}

TEST(Quadrature, CellClassificationIsSound) {
  const SublevelDomain dom{GraphFamily::SinExp, 3.0};
  EXPECT_EQ(classify_cell(dom, {-0.1, 0.1, -0.1, 0.1}), CellClass::Inside);
  EXPECT_EQ(classify_cell(dom, {3.5, 4.0, 0.0, 0.5}), CellClass::Outside);
  EXPECT_TRUE(in_sublevel(dom, {0.0, 0.0}));
  EXPECT_FALSE(in_sublevel(dom, {2.0, 1.0}));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.2, 3.2);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int decided = 0;
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng), y = u(rng), w = 0.05 * u01(rng) + 1e-4;
    const RectBounds cell{x, x + w, y, y + w};
    const CellClass k = classify_cell(dom, cell);
    if (k != CellClass::Inside && k != CellClass::Outside) continue;
    ++decided;
    for (int j = 0; j < 8; ++j) {
      const Complex z(x + w * u01(rng), y + w * u01(rng));
      EXPECT_EQ(in_sublevel(dom, z), k == CellClass::Inside) << x << "," << y;
    }
  }
  EXPECT_GT(decided, 1000);
}

TEST(Quadrature, LowerBoundAtLeastPacketBound) {
  const double r = 3.2;
  const auto a = graph_area({GraphFamily::SinExp, r}, with_depth(9));
  EXPECT_GE(a.lower, packet_growth_lower_bound(GraphFamily::SinExp, r) - 1e-12);
}

TEST(Quadrature, MonotoneInRadius) {
  for (auto fam : {GraphFamily::SinExp, GraphFamily::SinExpSq, GraphFamily::Exp}) {
    const auto c = props::quadrature_monotone_in_r(fam, {0.5, 1.0, 1.5, 2.0, 2.25, 2.5, 2.75, 3.0}, 8);
    EXPECT_TRUE(c.ok) << family_name(fam) << ": " << c.detail;
  }
}

TEST(Quadrature, MonotoneInDepth) {
  for (auto fam : {GraphFamily::SinExp, GraphFamily::SinExpSq, GraphFamily::Exp}) {
    const auto c = props::quadrature_monotone_in_depth(fam, 2.7, 2, 10);
    EXPECT_TRUE(c.ok) << family_name(fam) << ": " << c.detail;
  }
}

TEST(Quadrature, BitIdenticalAcrossThreadCounts) {
  for (auto mode : {QuadMode::LowerBound, QuadMode::Estimate}) {
    const auto c = props::deterministic_across_threads(GraphFamily::SinExp, {2.5, 3.2}, mode, 9);
    EXPECT_TRUE(c.ok) << c.detail;
  }
  const auto e = props::deterministic_across_threads(GraphFamily::Exp, {4.0}, QuadMode::Estimate, 9);
  EXPECT_TRUE(e.ok) << e.detail;
}

TEST(Quadrature, ThreadCountResolution) {
  EXPECT_EQ(resolve_thread_count(3), 3u);
  ::setenv("AREAGROWTH_THREADS", "2", 1);
  EXPECT_EQ(resolve_thread_count(0), 2u);
  EXPECT_EQ(resolve_thread_count(5), 5u);
  ::unsetenv("AREAGROWTH_THREADS");
  EXPECT_GE(resolve_thread_count(0), 1u);
}

TEST(Quadrature, DepthWarning) {
  // Two levels cannot resolve sin(e^z) anywhere near the tolerance.
  const auto a = graph_area({GraphFamily::SinExp, 3.0}, with_depth(2));
  EXPECT_TRUE(a.depth_exceeded);
  EXPECT_EQ(a.depth_reached, 2);
}
