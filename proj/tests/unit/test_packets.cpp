#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "areagrowth/error.hpp"
#include "areagrowth/packet_certifier.hpp"

using namespace areagrowth;

namespace {
constexpr double kPi = std::numbers::pi;

// Gauss-Legendre in r and the trapezoid rule in angle (spectral for periodic integrands).
double integral_abs_fprime_sq(const DiskPacket& p) {
  static const double x[] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                             -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                             0.7966664774136267,  0.9602898564975363};
  static const double w[] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                             0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};
  const int m = 64;
  double total = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double rho = 0.5 * p.radius * (x[i] + 1.0);
    double ring = 0.0;
    for (int k = 0; k < m; ++k) {
      const double t = 2.0 * kPi * k / m;
      const Complex z(p.center + rho * std::cos(t), rho * std::sin(t));
      const double a = eval_fprime(p.family, z).magnitude();
      ring += a * a;
    }
    total += w[i] * rho * ring * (2.0 * kPi / m);
  }
  return 0.5 * p.radius * total;
}
}  // namespace

TEST(Packets, Geometry) {
  const auto p = make_packet(GraphFamily::SinExp, 1);
  EXPECT_NEAR(p.center, 1.1447298858494002, 1e-15);
  EXPECT_NEAR(p.radius, 0.019894367886486917, 1e-17);
  const auto q = make_packet(GraphFamily::SinExpSq, 2, 0.01);
  EXPECT_NEAR(q.center, 1.3556832470785148, 1e-15);
  EXPECT_NEAR(q.radius, 0.006005612043932249, 1e-17);
}

TEST(Packets, RejectsBadParameters) {
  EXPECT_THROW(min_packet_index(GraphFamily::Exp), Error);
  EXPECT_THROW(make_packet(GraphFamily::Exp, 3), Error);
  EXPECT_THROW(make_packet(GraphFamily::SinExp, 0), Error);
  EXPECT_THROW(make_packet(GraphFamily::SinExpSq, 1, 0.01), Error);
  EXPECT_THROW(make_packet(GraphFamily::SinExpSq, 5, 0.02), Error);
  EXPECT_THROW(make_packet(GraphFamily::SinExpSq, 5, 0.0), Error);
}

TEST(Packets, ExpMinusOneBound) {
  for (std::int64_t n = 1; n <= 50; ++n) EXPECT_TRUE(verify_ez_minus_one_bound(n, 2000)) << n;
}

TEST(Packets, DisjointnessAndGap) {
  const auto r = verify_disjoint(GraphFamily::SinExp, 5, 6);
  EXPECT_TRUE(r.all_disjoint);
  EXPECT_NEAR(r.min_gap, 0.17502695523557609, 1e-15);
  EXPECT_TRUE(verify_disjoint(GraphFamily::SinExp, 1, 1000).all_disjoint);
  EXPECT_TRUE(verify_disjoint(GraphFamily::SinExpSq, 2, 200, 0.01).all_disjoint);
  EXPECT_TRUE(std::isinf(verify_disjoint(GraphFamily::SinExp, 7, 7).min_gap));
}

TEST(Packets, IntervalCertificates) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto p = make_packet(GraphFamily::SinExp, n);
    const auto c = certify_packet(p, CertMethod::IntervalProof);
    EXPECT_TRUE(c.ok()) << n;
    EXPECT_TRUE(c.rigorous) << n;
    EXPECT_LT(c.max_abs_f, 2.0);
    EXPECT_GE(c.min_abs_fprime, kPi * n / 4.0);
    EXPECT_EQ(packet_area_lower(p, c), kPi / 4096.0);
  }
}

TEST(Packets, SamplingCertificates) {
  for (std::int64_t n : {101, 250, 999}) {
    const auto p = make_packet(GraphFamily::SinExp, n);
    const auto c = certify_packet(p, CertMethod::DenseSampling, 10000);
    EXPECT_TRUE(c.ok()) << n;
    EXPECT_FALSE(c.rigorous);
    EXPECT_GE(c.samples, 10000);
  }
}

TEST(Packets, GaussianCertificates) {
  for (std::int64_t n : {2, 3, 10, 57, 200}) {
    const auto p = make_packet(GraphFamily::SinExpSq, n, 0.01);
    const auto c = certify_packet(p, CertMethod::IntervalProof);
    EXPECT_TRUE(c.ok()) << n;
    const double z = p.center;
    const double expected = kPi * kPi * kPi * 0.01 * 0.01 * z * z / (4.0 * std::log(double(n)));
    EXPECT_NEAR(packet_area_lower(p, c), expected, 1e-12 * expected);
  }
}

TEST(Packets, UncertifiedPacketHasNoArea) {
  const auto p = make_packet(GraphFamily::SinExp, 4);
  // An unreachable |f'| floor cannot be certified.
  const auto c = certify_packet(p, CertMethod::IntervalProof, 2000, PacketTargets{2.0, 1e6});
  EXPECT_FALSE(c.ok());
  try {
    packet_area_lower(p, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UncertifiedPacket);
  }
}

TEST(Packets, AreaQuantumIsBelowActualIntegral) {
  // The integral of |f'|^2 over D_3 from a 40-digit reference.
  const auto p = make_packet(GraphFamily::SinExp, 3);
  EXPECT_NEAR(integral_abs_fprime_sq(p), 0.012272131394860526, 1e-9);
  EXPECT_GE(integral_abs_fprime_sq(p), kPi / 4096.0);
}

TEST(Packets, CountMatchesBruteForce) {
  for (double r = 2.0; r <= 14.0; r += 0.173) {
    std::int64_t n = 0;
    while (std::log((n + 1) * kPi) + 2.0 <= r) ++n;
    EXPECT_EQ(count_packets_in_ball(GraphFamily::SinExp, r), n) << r;
  }
  for (double r = 1.5; r <= 4.2; r += 0.0917) {
    std::int64_t cnt = 0;
    for (std::int64_t n = 2; n < 100000000; ++n) {
      const auto p = make_packet(GraphFamily::SinExpSq, n, 0.01);
      if ((p.center + p.radius) * (p.center + p.radius) + 0.0625 > r * r) break;
      ++cnt;
    }
    EXPECT_EQ(count_packets_in_ball(GraphFamily::SinExpSq, r, 0.01), cnt) << r;
  }
}

TEST(Packets, GrowthLowerBound) {
  EXPECT_NEAR(packet_growth_lower_bound(GraphFamily::SinExp, 6.0), 17 * kPi / 4096.0, 1e-17);
  EXPECT_EQ(packet_growth_lower_bound(GraphFamily::SinExp, 2.5), 0.0);
  EXPECT_EQ(count_packets_in_ball(GraphFamily::SinExp, 2.0 + std::log(kPi)), 1);
}
