#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ostrings/asymptotics.hpp"
#include "ostrings/series.hpp"

using namespace ostrings;
using namespace ostrings::asym;

namespace {

// Independent oracle: the defining power series
//   I_nu(z) = sum_m (z/2)^{2m+nu} / (m! Gamma(m+nu+1)),
// with Gamma evaluated by MPFR. Kept free of the closed-form path.
Real bessel_series_oracle(long two_nu, const Real& z) {
  const mpfr_prec_t work = z.precision() + 96;
  const Real half_z = z.at_precision(work) / Real::of(2L, work);
  const Real nu = Real::of(two_nu, work) / Real::of(2L, work);
  Real sum(work);
  Real bound(work);
  for (long m = 0; m < 100000; ++m) {
    Real term = pow(half_z, Real::of(2 * m, work) + nu);
    Real fact(work);
    mpfr_fac_ui(fact.raw(), static_cast<unsigned long>(m), MPFR_RNDN);
    Real gam(work);
    Real garg = Real::of(m, work) + nu + Real::of(1L, work);
    mpfr_gamma(gam.raw(), garg.raw(), MPFR_RNDN);
    term = term / (fact * gam);
    sum += term;
    bound = max(bound, abs(sum));
    if (m > 4 && abs(term) < bound * Real::pow2(-static_cast<long>(work) + 8,
                                                work))
      break;
  }
  return sum.at_precision(z.precision());
}

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace

TEST_CASE("half-order values against the defining series") {
  const mpfr_prec_t prec = 256;
  const Real tol = Real::of(1e-12, prec);

  // I_{1/2}(1) = sqrt(2/pi) sinh 1
  const Real v = bessel_I_half(1, Real::of(1.0, prec));
  const Real expected =
      sqrt(Real::of(2L, prec) / Real::pi(prec)) * sinh(Real::of(1.0, prec));
  CHECK(rel_diff(v, expected) < Real::of(1e-30, prec));
  CHECK(abs(v - Real::of(0.9376748882, prec)) < Real::of(1e-9, prec));

  for (long two_nu : {1L, -1L, -3L, -5L, -7L}) {
    for (long zi = 1; zi <= 50; ++zi) {
      const Real z = Real::of(zi, prec);
      const Real closed = bessel_I_half(two_nu, z);
      const Real series = bessel_series_oracle(two_nu, z);
      CHECK(rel_diff(closed, series) < tol);
    }
  }

  CHECK(rel_diff(bessel_I_half(-7, Real::of(10.0, prec)),
                 bessel_series_oracle(-7, Real::of(10.0, prec))) < tol);
}

TEST_CASE("large-argument asymptote of I_{-1/2}") {
  const mpfr_prec_t prec = 256;
  for (double zd : {50.0, 200.0, 800.0}) {
    const Real z = Real::of(zd, prec);
    const Real scaled = bessel_I_half(-1, z) *
                        sqrt(Real::of(2L, prec) * Real::pi(prec) * z) *
                        exp(-z);
    CHECK(abs(scaled - Real::of(1L, prec)) < Real::of(1e-20, prec));
  }
}

TEST_CASE("recurrence consistency across implemented orders") {
  const mpfr_prec_t prec = 256;
  const Real eps = Real::pow2(-static_cast<long>(prec) + 16, prec);
  for (long two_nu : {-5L, -3L, -1L, 1L}) {
    for (long zi : {1L, 2L, 5L, 10L, 37L, 100L}) {
      const Real z = Real::of(zi, prec);
      const Real lhs =
          bessel_I_half(two_nu - 2, z) - bessel_I_half(two_nu + 2, z);
      const Real rhs =
          Real::of(two_nu, prec) / z * bessel_I_half(two_nu, z);
      CHECK(abs(lhs - rhs) <= eps * max(abs(lhs), abs(rhs)));
    }
  }
}

TEST_CASE("bessel argument and order validation") {
  CHECK_THROWS_AS(bessel_I_half(2, Real::of(1.0, 256)), std::invalid_argument);
  CHECK_THROWS_AS(bessel_I_half(1, Real::of(0.0, 256)), std::domain_error);
  CHECK_THROWS_AS(bessel_I_half(1, Real::of(-3.0, 256)), std::domain_error);
}

TEST_CASE("main term scaling in the string-start index") {
  const mpfr_prec_t prec = 256;
  const Real three = Real::of(3L, prec);
  for (unsigned long N : {1ul, 7ul, 100ul, 1600ul}) {
    const Real ratio = string_diff_main_term(2, N, prec) /
                       string_diff_main_term(1, N, prec);
    CHECK(abs(ratio - three) < Real::pow2(-240, prec));
  }
  for (long k = 1; k < 6; ++k)
    CHECK(string_diff_main_term(k, 50, prec) <
          string_diff_main_term(k + 1, 50, prec));
  for (unsigned long N = 2; N < 40; ++N)
    CHECK(string_diff_main_term(1, N, prec) <
          string_diff_main_term(1, N + 1, prec));
}

TEST_CASE("main term scaling in the string modulus") {
  const mpfr_prec_t prec = 256;
  const Real two = Real::of(2L, prec);
  for (unsigned long N : {1ul, 13ul, 400ul}) {
    const Real ratio = m_string_excess_main_term(3, N, prec) /
                       m_string_excess_main_term(2, N, prec);
    CHECK(abs(ratio - two) < Real::pow2(-240, prec));
  }
}

TEST_CASE("ospt-bar main term against the overpartition asymptote") {
  const mpfr_prec_t prec = 256;
  const Real eighth = Real::of(1L, prec) / Real::of(8L, prec);
  for (unsigned long n : {1ul, 10ul, 2500ul}) {
    const Real pbar_scale =
        exp(Real::pi(prec) * sqrt(Real::of(static_cast<long>(n), prec))) /
        (Real::of(8L, prec) * Real::of(static_cast<long>(n), prec));
    const Real ratio = ospt_bar_main_term(n, prec) / pbar_scale;
    CHECK(abs(ratio - eighth) < Real::pow2(-240, prec));
  }
  const Real v = ospt_bar_main_term(1, prec);
  const Real expected = exp(Real::pi(prec)) / Real::of(64L, prec);
  CHECK(rel_diff(v, expected) < Real::pow2(-200, prec));
}

TEST_CASE("auto precision grows with N") {
  CHECK(auto_precision(1) == 256);
  CHECK(auto_precision(10000) > 400);
  CHECK(auto_precision(10000, 1024) == 1024);
}

TEST_CASE("asymptotic report: decreasing relative error for the difference") {
  const mpfr_prec_t prec = auto_precision(1600);
  const auto f1 = qseries::string_diff_gf(1, 1600);
  const auto rows =
      asymptotic_report(ReportKind::AB, 1, {100, 400, 1600}, f1, prec);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].relative_error > rows[1].relative_error);
  CHECK(rows[1].relative_error > rows[2].relative_error);
  for (const auto& r : rows) CHECK(r.main_term.sign() > 0);

  CHECK(asymptotic_report(ReportKind::AB, 1, {}, f1, prec).empty());
  CHECK_THROWS_AS(asymptotic_report(ReportKind::AB, 1, {2000}, f1, prec),
                  qseries::OrderMismatchError);
}

TEST_CASE("asymptotic report: ospt-bar at n = 2500 lands in the window") {
  const mpfr_prec_t prec = auto_precision(2500);
  const auto ospt = qseries::ospt_bar_series(2500);
  const auto rows =
      asymptotic_report(ReportKind::ospt, 0, {100, 400, 2500}, ospt, prec);
  const Real ratio = Real::of(rows[2].exact, prec) / rows[2].main_term;
  CHECK(ratio > Real::of(0.5, prec));
  CHECK(ratio < Real::of(1.5, prec));
  CHECK(rows[0].relative_error > rows[2].relative_error);
}
