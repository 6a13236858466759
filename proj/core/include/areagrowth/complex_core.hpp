#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string_view>

#include "areagrowth/interval.hpp"

namespace areagrowth {

using Complex = std::complex<double>;

/// The holomorphic functions whose graphs are studied.
enum class GraphFamily {
  SinExp,    ///< f(z) = sin(e^z)
  SinExpSq,  ///< f(z) = sin(e^{z^2})
  Exp,       ///< f(z) = e^z
};

std::string_view family_name(GraphFamily family) noexcept;
std::optional<GraphFamily> parse_family(std::string_view name) noexcept;

/// Complex value stored as (natural log of modulus, phase).
///
/// Zero is log_mag = -inf. Phase lies in (-pi, pi]. A phase of 0 is reported
/// when the argument cannot be reduced meaningfully in double precision; the
/// modulus is still accurate in that case.
struct LogScaledComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogScaledComplex from_complex(Complex z);
  /// Plain value; components overflow to infinity when log_mag exceeds log(DBL_MAX).
  [[nodiscard]] Complex to_complex() const;
  [[nodiscard]] double magnitude() const;
  [[nodiscard]] bool is_zero() const { return log_mag == -std::numeric_limits<double>::infinity(); }
};

LogScaledComplex operator*(const LogScaledComplex& a, const LogScaledComplex& b);

/// Maps any angle into (-pi, pi].
double normalize_phase(double phase);

/// Axis-aligned cell in the parameter plane.
struct RectBounds {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;

  static RectBounds point(Complex z) { return {z.real(), z.real(), z.imag(), z.imag()}; }
  /// Throws Error(InvalidArgument) unless finite and ordered.
  void validate() const;

  [[nodiscard]] double width() const { return re_hi - re_lo; }
  [[nodiscard]] double height() const { return im_hi - im_lo; }
  [[nodiscard]] double area() const { return width() * height(); }
  [[nodiscard]] Complex center() const {
    return {0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi)};
  }
  [[nodiscard]] bool contains(Complex z) const {
    return re_lo <= z.real() && z.real() <= re_hi && im_lo <= z.imag() && z.imag() <= im_hi;
  }
  [[nodiscard]] Interval re() const { return {re_lo, re_hi}; }
  [[nodiscard]] Interval im() const { return {im_lo, im_hi}; }
};

/// Enclosure [lo, hi] of a modulus, held as natural logs.
/// log_lo = -inf means lo = 0; log_hi = +inf means unbounded.
struct MagInterval {
  double log_lo = -std::numeric_limits<double>::infinity();
  double log_hi = std::numeric_limits<double>::infinity();

  static MagInterval trivial() { return {}; }

  [[nodiscard]] double lo() const;  // rounded down
  [[nodiscard]] double hi() const;  // rounded up
  [[nodiscard]] bool is_trivial() const {
    return log_lo == -std::numeric_limits<double>::infinity() &&
           log_hi == std::numeric_limits<double>::infinity();
  }
  [[nodiscard]] bool contains_log(double log_value) const {
    return log_lo <= log_value && log_value <= log_hi;
  }
};

/// f(z) for the family. Throws Error(InvalidArgument) on non-finite input.
LogScaledComplex eval_f(GraphFamily family, Complex z);
/// Exact derivative f'(z).
LogScaledComplex eval_fprime(GraphFamily family, Complex z);

/// Rigorous bounds on |f| over a cell. Falls back to the trivial interval when
/// e^{Re} of the inner exponent is out of range.
MagInterval bound_abs_f(GraphFamily family, const RectBounds& cell);
/// Rigorous bounds on |f'| over a cell.
MagInterval bound_abs_fprime(GraphFamily family, const RectBounds& cell);

}  // namespace areagrowth
