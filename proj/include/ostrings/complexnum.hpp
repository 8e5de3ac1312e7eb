#pragma once

#include "ostrings/real.hpp"

namespace ostrings {

/// Complex value built on two Reals at matching precision.
struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex of(double r, double i, mpfr_prec_t prec) {
    return {Real::of(r, prec), Real::of(i, prec)};
  }
  static Complex zero(mpfr_prec_t prec) { return Complex(prec); }
  static Complex one(mpfr_prec_t prec) {
    return {Real::of(1L, prec), Real::of(0L, prec)};
  }

  mpfr_prec_t precision() const { return re.precision(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) {
    return {s * a.re, s * a.im};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator/(const Complex& a, const Real& s) {
    return {a.re / s, a.im / s};
  }

  Complex& operator+=(const Complex& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Complex& operator-=(const Complex& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  Complex& operator*=(const Complex& b) {
    *this = *this * b;
    return *this;
  }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }

/// Cheap upper bound on |z| (within a factor sqrt(2)).
inline Real abs_bound(const Complex& z) { return abs(z.re) + abs(z.im); }

inline Complex cis(const Real& theta) { return {cos(theta), sin(theta)}; }

inline Complex cexp(const Complex& z) { return exp(z.re) * cis(z.im); }

/// Principal argument via atan2.
inline Real carg(const Complex& z) { return atan2(z.im, z.re); }

/// Principal branch of z^(p/2) for integer p (used with p odd for the
/// half-integer powers on the contour, where Re(-i tau) > 0 keeps
/// everything clear of the cut).
inline Complex cpow_half(const Complex& z, long p) {
  const mpfr_prec_t prec = z.precision();
  const Real r = abs(z);
  const Real half_p = Real::of(p, prec) / Real::of(2L, prec);
  const Real mag = pow(r, half_p);
  const Real ang = carg(z) * half_p;
  return mag * cis(ang);
}

/// Principal square root, algebraic form (no trigonometry). Well suited to
/// the right half-plane arguments used on the contour.
inline Complex csqrt(const Complex& z) {
  const mpfr_prec_t prec = z.precision();
  if (z.im.is_zero() && !(z.re.sign() < 0)) return {sqrt(z.re), Real(prec)};
  const Real r = abs(z);
  const Real u = sqrt((r + z.re) / Real::of(2L, prec));
  if (u.is_zero()) {
    Real v = sqrt(r);
    if (z.im.sign() < 0) v = -v;
    return {Real(prec), v};
  }
  return {u, z.im / (Real::of(2L, prec) * u)};
}

/// z^n by binary exponentiation, n >= 0.
inline Complex cpow_ui(Complex z, unsigned long long n) {
  Complex out = Complex::one(z.precision());
  while (n > 0) {
    if (n & 1ull) out *= z;
    z *= z;
    n >>= 1;
  }
  return out;
}

// ---- allocation-free kernels for hot summation loops ------------------------

/// a *= b without temporaries beyond one caller-provided scratch register.
inline void cmul_inplace(Complex& a, const Complex& b, Real& scratch) {
  mpfr_fmms(scratch.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(),
            MPFR_RNDN);
  mpfr_fmma(a.im.raw(), a.re.raw(), b.im.raw(), a.im.raw(), b.re.raw(),
            MPFR_RNDN);
  mpfr_swap(a.re.raw(), scratch.raw());
}

inline void cadd_inplace(Complex& a, const Complex& b) {
  mpfr_add(a.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_add(a.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
}

inline void csub_inplace(Complex& a, const Complex& b) {
  mpfr_sub(a.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_sub(a.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
}

inline void cset(Complex& a, const Complex& b) {
  mpfr_set(a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_set(a.im.raw(), b.im.raw(), MPFR_RNDN);
}

/// Upper bound on log2|z|, cheap (exponent inspection only); very negative
/// when z = 0.
inline long mag_exp_bound(const Complex& z) {
  constexpr long kTiny = -(1L << 40);
  long e = kTiny;
  if (!z.re.is_zero()) e = std::max(e, static_cast<long>(mpfr_get_exp(z.re.raw())));
  if (!z.im.is_zero()) e = std::max(e, static_cast<long>(mpfr_get_exp(z.im.raw())));
  return e == kTiny ? kTiny : e + 1;
}

inline long real_exp_bound(const Real& x) {
  constexpr long kTiny = -(1L << 40);
  return x.is_zero() ? kTiny : static_cast<long>(mpfr_get_exp(x.raw()));
}

}  // namespace ostrings
