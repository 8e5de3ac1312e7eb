#pragma once

#include "ostrings/real.hpp"

namespace ostrings::testsupport {

// Defining power series of I_nu, nu = two_nu/2, with MPFR's Gamma; the
// independent reference for the closed-form evaluator.
inline Real bessel_series_oracle(long two_nu, const Real& z) {
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
    if (m > 4 &&
        abs(term) < bound * Real::pow2(-static_cast<long>(work) + 8, work))
      break;
  }
  return sum.at_precision(z.precision());
}

}  // namespace ostrings::testsupport
