#pragma once

#include <cstdint>

#include "areagrowth/complex_core.hpp"

namespace areagrowth {

/// Largest delta accepted for sin(e^{z^2}) packets.
inline constexpr double kGaussianDeltaMax = 1e-2;

/// Parameter-plane disk D_n on which |f| stays bounded while |f'| is large.
struct DiskPacket {
  std::int64_t n = 1;
  GraphFamily family = GraphFamily::SinExp;
  double center = 0.0;  // on the real axis
  double radius = 0.0;
  double delta = 0.0;   // SinExpSq only
};

enum class CertMethod { IntervalProof, DenseSampling };

/// Targets a packet must satisfy to be counted.
///
/// sin(e^z): |f| < 2 and |f'| >= pi n / 4. sin(e^{z^2}): |f| < 1/4 (so that a
/// small containment margin suffices) and |f'| >= |f'(center)| / 4 = pi n z_n / 2.
struct PacketTargets {
  double f_max = 2.0;
  double fprime_min = 0.0;
};

PacketTargets default_targets(const DiskPacket& packet);

struct PacketCertificate {
  std::int64_t n = 0;
  double max_abs_f = 0.0;
  double min_abs_fprime = 0.0;
  bool f_bound_ok = false;
  bool fprime_bound_ok = false;
  CertMethod method = CertMethod::IntervalProof;
  /// False for sampling results, including an inconclusive interval proof that fell back.
  bool rigorous = false;
  std::int64_t samples = 0;
  /// Cover refinements used by the interval proof (0 = 8x8 grid).
  int refinements = 0;

  [[nodiscard]] bool ok() const { return f_bound_ok && fprime_bound_ok; }
};

struct DisjointnessReport {
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  bool all_disjoint = true;
  /// Minimum of |c_k - c_m| - (rho_k + rho_m) over pairs; +inf for a single packet.
  double min_gap = std::numeric_limits<double>::infinity();
};

/// Smallest admissible packet index for the family (throws for Exp).
std::int64_t min_packet_index(GraphFamily family);

DiskPacket make_packet(GraphFamily family, std::int64_t n, double delta = 0.0);

/// Checks |e^z - 1| < 1/(4 pi n) on |z| <= 1/(16 pi n): the closed-form chain
/// |z| e^{|z|} at the boundary radius, plus `samples` points including the boundary circle.
bool verify_ez_minus_one_bound(std::int64_t n, std::int64_t samples);

DisjointnessReport verify_disjoint(GraphFamily family, std::int64_t n_lo, std::int64_t n_hi,
                                   double delta = 0.0);

PacketCertificate certify_packet(const DiskPacket& packet, CertMethod method,
                                 std::int64_t samples = 10000);
PacketCertificate certify_packet(const DiskPacket& packet, CertMethod method, std::int64_t samples,
                                 const PacketTargets& targets);

/// Area contributed by a certified packet: (min |f'| target)^2 * area(D_n).
/// Equals pi/4096 for every sin(e^z) packet. Throws Error(UncertifiedPacket).
double packet_area_lower(const DiskPacket& packet, const PacketCertificate& cert);

/// Number of packets contained in Omega_r.
///
/// sin(e^z): max{n >= 0 : log(n pi) + 2 <= r}. sin(e^{z^2}): #{n >= 2 :
/// (z_n + rho_n)^2 + f_max^2 <= r^2}, using the default |f| target.
std::int64_t count_packets_in_ball(GraphFamily family, double r, double delta = 0.0);

/// count_packets_in_ball times the per-packet area guaranteed for every counted packet.
double packet_growth_lower_bound(GraphFamily family, double r, double delta = 0.0);

}  // namespace areagrowth
