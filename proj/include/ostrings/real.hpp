#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "ostrings/bigint.hpp"

namespace ostrings {

/// Correctly rounded floating-point value at an explicit binary precision
/// (MPFR underneath). Binary operations round at the larger of the two
/// operand precisions.
class Real {
 public:
  static constexpr mpfr_prec_t kMinPrecision = 64;

  explicit Real(mpfr_prec_t prec = 256) {
    check_precision(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  static Real of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }

  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  static Real of(const BigInt& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  /// 2^e at the given precision (exact).
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  /// Copy rounded to the given precision.
  Real at_precision(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Nearest integer as a BigInt.
  BigInt round_to_integer() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  /// Decimal rendering with the given number of significant digits.
  std::string str(int significant_digits = 20) const;

  friend Real operator+(const Real& a, const Real& b) {
    Real r(common_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(common_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(common_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(common_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& b) {
    mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& b) {
    mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& b) {
    mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& b) {
    mpfr_div(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }

 private:
  static void check_precision(mpfr_prec_t prec) {
    if (prec < kMinPrecision)
      throw std::invalid_argument("precision must be at least 64 bits");
  }
  static mpfr_prec_t common_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
  }
  mpfr_t v_;
};

#define OSTRINGS_REAL_UNARY(name, mpfr_fn)     \
  inline Real name(const Real& x) {            \
    Real r(x.precision());                     \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);      \
    return r;                                  \
  }

OSTRINGS_REAL_UNARY(sqrt, mpfr_sqrt)
OSTRINGS_REAL_UNARY(exp, mpfr_exp)
OSTRINGS_REAL_UNARY(log, mpfr_log)
OSTRINGS_REAL_UNARY(sinh, mpfr_sinh)
OSTRINGS_REAL_UNARY(cosh, mpfr_cosh)
OSTRINGS_REAL_UNARY(sin, mpfr_sin)
OSTRINGS_REAL_UNARY(cos, mpfr_cos)
OSTRINGS_REAL_UNARY(abs, mpfr_abs)
#undef OSTRINGS_REAL_UNARY

inline Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

/// x^e for integer e >= 0 (binary powering, much cheaper than mpfr_pow).
inline Real pow_ui(const Real& x, unsigned long e) {
  Real r(x.precision());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline Real root(const Real& x, unsigned long n) {
  Real r(x.precision());
  mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

inline Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

}  // namespace ostrings
