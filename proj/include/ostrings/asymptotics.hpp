#pragma once

#include <vector>

#include "ostrings/bigint.hpp"
#include "ostrings/real.hpp"
#include "ostrings/series.hpp"

namespace ostrings::asym {

/// Precision that absorbs the e^{pi sqrt(N)} dynamic range of the exact
/// values: max(base, pi sqrt(N)/ln 2 + 64).
mpfr_prec_t auto_precision(unsigned long n_max, mpfr_prec_t base = 256);

/// Modified Bessel function of the first kind at half-integer order
/// nu = two_nu/2, evaluated in closed form from
///   I_{1/2}(z)  = sqrt(2/(pi z)) sinh z,
///   I_{-1/2}(z) = sqrt(2/(pi z)) cosh z,
/// extended by the three-term recurrence in both directions. Requires z > 0
/// and two_nu odd.
Real bessel_I_half(long two_nu, const Real& z);

/// Main term of the odd-minus-even string difference at start 2k-1:
///   (2k-1) pi^3/(64 sqrt 2) N^{-7/4} I_{-7/2}(pi sqrt N).
Real string_diff_main_term(long k, unsigned long N, mpfr_prec_t prec);

/// Main term of C_1(N) - m C_m(N):
///   (m-1) pi/(16 * 54^{1/4}) N^{-3/4} I_{-3/2}(pi sqrt(2N/3)).
Real m_string_excess_main_term(long m, unsigned long N, mpfr_prec_t prec);

/// Leading asymptote of ospt-bar: e^{pi sqrt n} / (64 n).
Real ospt_bar_main_term(unsigned long n, mpfr_prec_t prec);

enum class ReportKind { AB, C, ospt };

/// One exact-vs-main-term comparison row.
struct AsymptoticReport {
  ReportKind kind;
  long parameter;  // k for AB, m for C, unused for ospt
  unsigned long N;
  BigInt exact;
  Real main_term;
  Real relative_error;  // |exact - main| / main, main > 0
};

/// Reports for each N in the list, reading the exact value from the given
/// series (whose order must cover every N).
std::vector<AsymptoticReport> asymptotic_report(
    ReportKind kind, long parameter, const std::vector<unsigned long>& Ns,
    const qseries::TruncatedSeries& exact_series, mpfr_prec_t prec);

}  // namespace ostrings::asym
