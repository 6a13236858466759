#include "areagrowth/complex_core.hpp"

#include <cmath>
#include <numbers>

#include "areagrowth/error.hpp"

namespace areagrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;
// Above this |Im w| the hyperbolic terms dominate and std::sin(complex) would overflow.
constexpr double kHyperbolicCutoff = 700.0;
// Largest Re of an exponent for which e^{Re} is plain-representable with headroom.
constexpr double kExpCutoff = 700.0;

void require_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::InvalidArgument, "non-finite argument");
  }
}

struct SinCosOfExp {
  LogScaledComplex sin_w;
  LogScaledComplex cos_w;
};

// sin(w) and cos(w) for w = e^zeta.
SinCosOfExp sin_cos_of_exp(Complex zeta) {
  if (zeta.real() <= kExpCutoff) {
    const Complex w = std::exp(zeta);
    const double u = w.real();
    const double v = w.imag();
    if (std::abs(v) <= kHyperbolicCutoff) {
      return {LogScaledComplex::from_complex(std::sin(w)),
              LogScaledComplex::from_complex(std::cos(w))};
    }
    // sin w = sin u cosh v + i cos u sinh v, and cosh v = sinh v up to e^{-2|v|}.
    const double sv = v > 0 ? 1.0 : -1.0;
    const double lm = std::abs(v) - kLn2;
    return {{lm, normalize_phase(std::atan2(sv * std::cos(u), std::sin(u)))},
            {lm, normalize_phase(std::atan2(-sv * std::sin(u), std::cos(u)))}};
  }
  // w itself overflows; only |Im w| is recoverable through logs, and Re w cannot
  // be reduced mod 2pi, so the phase is reported as 0.
  const double s = std::sin(zeta.imag());
  const double log_abs_v = s == 0.0 ? -kInf : zeta.real() + std::log(std::abs(s));
  double lm = kInf;
  if (log_abs_v <= kExpCutoff) {
    const double abs_v = std::exp(log_abs_v);
    lm = abs_v > 20.0 ? abs_v - kLn2 : std::log(std::cosh(abs_v));
  }
  return {{lm, 0.0}, {lm, 0.0}};
}

Complex inner_exponent(GraphFamily family, Complex z) {
  return family == GraphFamily::SinExpSq ? z * z : z;
}

// 0.5 * log(s + e^{2L}) with s >= 0, evaluated without overflow.
double half_log_sum(double s, double log_t) {
  if (s <= 0.0) return log_t;
  const double half_log_s = 0.5 * std::log(s);
  if (log_t == -kInf) return half_log_s;
  const double m = std::max(half_log_s, log_t);
  return m + 0.5 * std::log(std::exp(2.0 * (half_log_s - m)) + std::exp(2.0 * (log_t - m)));
}

double log_down(double x) {
  if (!std::isfinite(x)) return x;
  return round_down(x - 1e-15 * (1.0 + std::abs(x)), 2);
}

double log_up(double x) {
  if (!std::isfinite(x)) return x;
  return round_up(x + 1e-15 * (1.0 + std::abs(x)), 2);
}

struct TrigBounds {
  MagInterval sin_w;
  MagInterval cos_w;
};

// Bounds on |sin w| and |cos w| for w = e^zeta with zeta in the given box,
// from |sin w|^2 = sin^2 u + sinh^2 v and |cos w|^2 = cos^2 u + sinh^2 v.
std::optional<TrigBounds> trig_of_exp_bounds(const Interval& re_zeta, const Interval& im_zeta) {
  if (!(re_zeta.hi <= kExpCutoff)) return std::nullopt;
  const Interval e = exp(re_zeta);
  const Interval u = e * cos(im_zeta);
  const Interval v = e * sin(im_zeta);
  const Interval log_sh = log_sinh(abs(v));
  const Interval su = sin(u);
  const Interval cu = cos(u);
  const Interval s2 = sqr(su);
  const Interval c2 = sqr(cu);

  TrigBounds out;
  out.sin_w.log_lo = log_down(half_log_sum(s2.lo, log_sh.lo));
  out.sin_w.log_hi = log_up(half_log_sum(s2.hi, log_sh.hi));
  out.cos_w.log_lo = log_down(half_log_sum(c2.lo, log_sh.lo));
  out.cos_w.log_hi = log_up(half_log_sum(c2.hi, log_sh.hi));
  // |sin w|, |cos w| <= e^{|w|} and |w| = e^{Re zeta}.
  out.sin_w.log_hi = std::min(out.sin_w.log_hi, e.hi);
  out.cos_w.log_hi = std::min(out.cos_w.log_hi, e.hi);
  return out;
}

double add_down(double a, double b) {
  if (a == -kInf || b == -kInf) return -kInf;
  return log_down(a + b);
}

double add_up(double a, double b) {
  if (a == -kInf || b == -kInf) return -kInf;
  return log_up(a + b);
}

}  // namespace

std::string_view family_name(GraphFamily family) noexcept {
  switch (family) {
    case GraphFamily::SinExp: return "sin-exp";
    case GraphFamily::SinExpSq: return "sin-exp-sq";
    case GraphFamily::Exp: return "exp";
  }
  return "?";
}

std::optional<GraphFamily> parse_family(std::string_view name) noexcept {
  if (name == "sin-exp") return GraphFamily::SinExp;
  if (name == "sin-exp-sq") return GraphFamily::SinExpSq;
  if (name == "exp") return GraphFamily::Exp;
  return std::nullopt;
}

double normalize_phase(double phase) {
  double r = std::remainder(phase, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

LogScaledComplex LogScaledComplex::from_complex(Complex z) {
  const double m = std::abs(z);
  if (m == 0.0) return {-kInf, 0.0};
  return {std::log(m), normalize_phase(std::arg(z))};
}

Complex LogScaledComplex::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_mag), phase);
}

double LogScaledComplex::magnitude() const { return std::exp(log_mag); }

LogScaledComplex operator*(const LogScaledComplex& a, const LogScaledComplex& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.log_mag + b.log_mag, normalize_phase(a.phase + b.phase)};
}

void RectBounds::validate() const {
  const bool finite = std::isfinite(re_lo) && std::isfinite(re_hi) && std::isfinite(im_lo) &&
                      std::isfinite(im_hi);
  if (!finite || re_lo > re_hi || im_lo > im_hi) {
    throw Error(ErrorKind::InvalidArgument, "invalid cell bounds");
  }
}

double MagInterval::lo() const {
  if (log_lo == -kInf) return 0.0;
  return std::max(0.0, round_down(std::exp(log_lo), 2));
}

double MagInterval::hi() const {
  if (log_hi == kInf) return kInf;
  return round_up(std::exp(log_hi), 2);
}

LogScaledComplex eval_f(GraphFamily family, Complex z) {
  require_finite(z);
  if (family == GraphFamily::Exp) return {z.real(), normalize_phase(z.imag())};
  return sin_cos_of_exp(inner_exponent(family, z)).sin_w;
}

LogScaledComplex eval_fprime(GraphFamily family, Complex z) {
  require_finite(z);
  switch (family) {
    case GraphFamily::Exp:
      return {z.real(), normalize_phase(z.imag())};
    case GraphFamily::SinExp: {
      const LogScaledComplex e{z.real(), normalize_phase(z.imag())};
      return e * sin_cos_of_exp(z).cos_w;
    }
    case GraphFamily::SinExpSq: {
      const Complex zeta = z * z;
      const LogScaledComplex e{zeta.real(), normalize_phase(zeta.imag())};
      const LogScaledComplex two_z = LogScaledComplex::from_complex(2.0 * z);
      return two_z * e * sin_cos_of_exp(zeta).cos_w;
    }
  }
  return {};
}

MagInterval bound_abs_f(GraphFamily family, const RectBounds& cell) {
  cell.validate();
  switch (family) {
    case GraphFamily::Exp:
      return {cell.re_lo, cell.re_hi};
    case GraphFamily::SinExp: {
      const auto tb = trig_of_exp_bounds(cell.re(), cell.im());
      return tb ? tb->sin_w : MagInterval::trivial();
    }
    case GraphFamily::SinExpSq: {
      const Interval x = cell.re();
      const Interval y = cell.im();
      const auto tb = trig_of_exp_bounds(sqr(x) - sqr(y), 2.0 * (x * y));
      return tb ? tb->sin_w : MagInterval::trivial();
    }
  }
  return MagInterval::trivial();
}

MagInterval bound_abs_fprime(GraphFamily family, const RectBounds& cell) {
  cell.validate();
  switch (family) {
    case GraphFamily::Exp:
      return {cell.re_lo, cell.re_hi};
    case GraphFamily::SinExp: {
      // |f'| = e^x |cos e^z|
      const auto tb = trig_of_exp_bounds(cell.re(), cell.im());
      if (!tb) return MagInterval::trivial();
      return {add_down(cell.re_lo, tb->cos_w.log_lo), add_up(cell.re_hi, tb->cos_w.log_hi)};
    }
    case GraphFamily::SinExpSq: {
      // |f'| = 2 |z| e^{Re z^2} |cos e^{z^2}|
      const Interval x = cell.re();
      const Interval y = cell.im();
      const Interval re_zeta = sqr(x) - sqr(y);
      const auto tb = trig_of_exp_bounds(re_zeta, 2.0 * (x * y));
      if (!tb) return MagInterval::trivial();
      const Interval mod_z = sqrt(sqr(abs(x)) + sqr(abs(y)));
      const Interval log_two_z = log(mod_z);
      double lo = add_down(add_down(kLn2, log_two_z.lo), add_down(re_zeta.lo, tb->cos_w.log_lo));
      double hi = add_up(add_up(kLn2, log_two_z.hi), add_up(re_zeta.hi, tb->cos_w.log_hi));
      return {lo, hi};
    }
  }
  return MagInterval::trivial();
}

}  // namespace areagrowth
