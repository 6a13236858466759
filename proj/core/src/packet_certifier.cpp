#include "areagrowth/packet_certifier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "areagrowth/error.hpp"

namespace areagrowth {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBaseGrid = 8;
constexpr int kMaxRefinements = 3;
constexpr double kGaussianFMax = 0.25;

void require_delta(double delta) {
  if (!(delta > 0.0 && delta <= kGaussianDeltaMax)) {
    throw Error(ErrorKind::InvalidArgument, "delta must lie in (0, 1e-2]");
  }
}

double sin_exp_radius(std::int64_t n) { return 1.0 / (16.0 * kPi * static_cast<double>(n)); }

double gaussian_center(std::int64_t n) { return std::sqrt(std::log(static_cast<double>(n) * kPi)); }

double gaussian_radius(std::int64_t n, double delta) {
  const double dn = static_cast<double>(n);
  return delta / (dn * std::sqrt(std::log(dn)));
}

// True if the closed disk of radius rho about (c, 0) meets the cell.
bool disk_meets(const RectBounds& cell, double c, double rho) {
  const double dx = std::max({cell.re_lo - c, 0.0, c - cell.re_hi});
  const double dy = std::max({cell.im_lo, 0.0, -cell.im_hi});
  return dx * dx + dy * dy <= rho * rho * (1.0 + 1e-12);
}

struct CoverBounds {
  double max_f = 0.0;
  double min_fprime = std::numeric_limits<double>::infinity();
};

CoverBounds interval_cover(const DiskPacket& p, int grid) {
  CoverBounds b;
  const double lo_x = p.center - p.radius;
  const double h = 2.0 * p.radius / grid;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const RectBounds cell{lo_x + i * h, i + 1 == grid ? p.center + p.radius : lo_x + (i + 1) * h,
                            -p.radius + j * h, j + 1 == grid ? p.radius : -p.radius + (j + 1) * h};
      if (!disk_meets(cell, p.center, p.radius)) continue;
      b.max_f = std::max(b.max_f, bound_abs_f(p.family, cell).hi());
      b.min_fprime = std::min(b.min_fprime, bound_abs_fprime(p.family, cell).lo());
    }
  }
  return b;
}

// Polar grid with `side` rings (center and boundary circle included) of `side` angles each.
template <class Fn>
std::int64_t for_each_disk_sample(double c, double rho, std::int64_t samples, Fn&& fn) {
  const auto side = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(samples)))) + 1;
  std::int64_t count = 0;
  fn(Complex{c, 0.0});
  ++count;
  for (std::int64_t j = 1; j < side; ++j) {
    const double t = j + 1 == side ? rho : rho * static_cast<double>(j) / static_cast<double>(side - 1);
    for (std::int64_t i = 0; i < side; ++i) {
      const double th = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(side);
      fn(Complex{c + t * std::cos(th), t * std::sin(th)});
      ++count;
    }
  }
  return count;
}

PacketCertificate sample_packet(const DiskPacket& p, std::int64_t samples, const PacketTargets& t) {
  PacketCertificate cert;
  cert.n = p.n;
  cert.method = CertMethod::DenseSampling;
  cert.rigorous = false;
  double max_f = 0.0;
  double min_fp = std::numeric_limits<double>::infinity();
  cert.samples = for_each_disk_sample(p.center, p.radius, samples, [&](Complex z) {
    max_f = std::max(max_f, eval_f(p.family, z).magnitude());
    min_fp = std::min(min_fp, eval_fprime(p.family, z).magnitude());
  });
  cert.max_abs_f = max_f;
  cert.min_abs_fprime = min_fp;
  cert.f_bound_ok = max_f < t.f_max;
  cert.fprime_bound_ok = min_fp >= t.fprime_min;
  return cert;
}

}  // namespace

std::int64_t min_packet_index(GraphFamily family) {
  switch (family) {
    case GraphFamily::SinExp: return 1;
    case GraphFamily::SinExpSq: return 2;
    case GraphFamily::Exp: break;
  }
  throw Error(ErrorKind::InvalidArgument, "the exp family has no packet construction");
}

DiskPacket make_packet(GraphFamily family, std::int64_t n, double delta) {
  const std::int64_t n_min = min_packet_index(family);
  if (n < n_min) {
    throw Error(ErrorKind::InvalidArgument, "packet index must be >= " + std::to_string(n_min));
  }
  DiskPacket p;
  p.n = n;
  p.family = family;
  if (family == GraphFamily::SinExp) {
    p.center = std::log(static_cast<double>(n) * kPi);
    p.radius = sin_exp_radius(n);
  } else {
    require_delta(delta);
    p.delta = delta;
    p.center = gaussian_center(n);
    p.radius = gaussian_radius(n, delta);
  }
  return p;
}

PacketTargets default_targets(const DiskPacket& packet) {
  const double dn = static_cast<double>(packet.n);
  if (packet.family == GraphFamily::SinExpSq) {
    return {kGaussianFMax, 0.25 * (2.0 * kPi * dn * packet.center)};
  }
  return {2.0, kPi * dn / 4.0};
}

bool verify_ez_minus_one_bound(std::int64_t n, std::int64_t samples) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const double rho = sin_exp_radius(n);
  const double bound = 1.0 / (4.0 * kPi * static_cast<double>(n));
  // |e^z - 1| <= |z| e^{|z|}, maximal on the boundary circle.
  const double chain = round_up(round_up(rho, 2) * round_up(std::exp(round_up(rho, 2)), 2), 2);
  bool ok = chain < bound;
  if (samples > 0) {
    for_each_disk_sample(0.0, rho, samples, [&](Complex z) {
      const double x = z.real();
      const double y = z.imag();
      const double s = std::sin(0.5 * y);
      const Complex em1{std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
      if (!(std::abs(em1) < bound)) ok = false;
    });
  }
  return ok;
}

DisjointnessReport verify_disjoint(GraphFamily family, std::int64_t n_lo, std::int64_t n_hi,
                                   double delta) {
  if (n_lo < min_packet_index(family)) throw Error(ErrorKind::InvalidArgument, "n_lo below family minimum");
  if (n_hi < n_lo) throw Error(ErrorKind::InvalidArgument, "empty packet range");
  if (family == GraphFamily::SinExpSq) require_delta(delta);
  DisjointnessReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  // Centers increase with n, so for m < k the slack of (m, k) is the sum of the
  // consecutive slacks in between plus twice the intermediate radii: the
  // minimum over all pairs is attained by a consecutive pair.
  for (std::int64_t n = n_lo; n < n_hi; ++n) {
    const double dn = static_cast<double>(n);
    double dc = 0.0;
    double rr = 0.0;
    if (family == GraphFamily::SinExp) {
      dc = std::log1p(1.0 / dn);
      rr = sin_exp_radius(n) + sin_exp_radius(n + 1);
    } else {
      dc = std::log1p(1.0 / dn) / (gaussian_center(n) + gaussian_center(n + 1));
      rr = gaussian_radius(n, delta) + gaussian_radius(n + 1, delta);
    }
    rep.min_gap = std::min(rep.min_gap, dc - rr);
  }
  rep.all_disjoint = rep.min_gap > 0.0;
  return rep;
}

PacketCertificate certify_packet(const DiskPacket& packet, CertMethod method, std::int64_t samples) {
  return certify_packet(packet, method, samples, default_targets(packet));
}

PacketCertificate certify_packet(const DiskPacket& packet, CertMethod method, std::int64_t samples,
                                 const PacketTargets& targets) {
  if (!(packet.radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "packet radius must be > 0");
  if (method == CertMethod::DenseSampling) return sample_packet(packet, samples, targets);

  for (int level = 0; level <= kMaxRefinements; ++level) {
    const CoverBounds b = interval_cover(packet, kBaseGrid << level);
    if (b.max_f < targets.f_max && b.min_fprime >= targets.fprime_min) {
      PacketCertificate cert;
      cert.n = packet.n;
      cert.max_abs_f = b.max_f;
      cert.min_abs_fprime = b.min_fprime;
      cert.f_bound_ok = true;
      cert.fprime_bound_ok = true;
      cert.method = CertMethod::IntervalProof;
      cert.rigorous = true;
      cert.refinements = level;
      return cert;
    }
  }
  // Inconclusive: report sampled values, marked non-rigorous.
  PacketCertificate cert = sample_packet(packet, samples, targets);
  cert.refinements = kMaxRefinements;
  return cert;
}

double packet_area_lower(const DiskPacket& packet, const PacketCertificate& cert) {
  if (cert.n != packet.n || !cert.ok()) {
    throw Error(ErrorKind::UncertifiedPacket, "packet " + std::to_string(packet.n) + " is not certified");
  }
  if (packet.family == GraphFamily::SinExp) {
    // (pi n / 4)^2 * pi (1 / (16 pi n))^2, with n cancelling.
    return kPi / 4096.0;
  }
  const double t = default_targets(packet).fprime_min;
  return t * t * kPi * packet.radius * packet.radius;
}

std::int64_t count_packets_in_ball(GraphFamily family, double r, double delta) {
  if (!std::isfinite(r)) throw Error(ErrorKind::InvalidArgument, "r must be finite");
  if (r <= 0.0) return 0;
  (void)min_packet_index(family);
  constexpr double kMaxCount = 4.0e18;

  if (family == GraphFamily::SinExp) {
    const double guess = std::floor(std::exp(r - 2.0) / kPi);
    if (guess > kMaxCount) throw Error(ErrorKind::InvalidArgument, "packet count overflows");
    auto fits = [r](std::int64_t n) { return std::log(static_cast<double>(n) * kPi) + 2.0 <= r; };
    auto n = static_cast<std::int64_t>(guess);
    while (fits(n + 1)) ++n;
    while (n > 0 && !fits(n)) --n;
    return n;
  }

  require_delta(delta);
  auto fits = [r, delta](std::int64_t n) {
    const double c = gaussian_center(n) + gaussian_radius(n, delta);
    return c * c + kGaussianFMax * kGaussianFMax <= r * r;
  };
  if (!fits(2)) return 0;
  const double upper = std::ceil(std::exp(r * r) / kPi) + 2.0;
  if (upper > kMaxCount) throw Error(ErrorKind::InvalidArgument, "packet count overflows");
  // fits() is monotone for n >= 2: z_n + rho_n increases with n.
  std::int64_t lo = 2;
  auto hi = static_cast<std::int64_t>(upper);
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo - 1;
}

double packet_growth_lower_bound(GraphFamily family, double r, double delta) {
  const auto count = static_cast<double>(count_packets_in_ball(family, r, delta));
  if (family == GraphFamily::SinExp) return count * (kPi / 4096.0);
  // Per-packet area pi^3 delta^2 log(n pi) / (4 log n) exceeds pi^3 delta^2 / 4.
  return count * (kPi * kPi * kPi * delta * delta / 4.0);
}

}  // namespace areagrowth
