#include "ostrings/circle.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "ostrings/asymptotics.hpp"
#include "ostrings/series.hpp"

namespace ostrings::circle {

namespace {

constexpr double kInversionBranchY = 0.1;

Real two_pi(mpfr_prec_t prec) {
  return Real::of(2L, prec) * Real::pi(prec);
}

// ---- pentagonal product ----------------------------------------------------

// (q;q)_inf as the sparse series 1 + sum_k (-1)^k (q^{k(3k-1)/2} + q^{k(3k+1)/2}),
// summed until the geometric tail bound certifies relative accuracy tol_rel.
// All powers advance incrementally; |q| powers are mirrored in Real to keep
// the stop rule cheap.
Complex pentagonal_product(const Complex& q, const Real& qmag,
                           const Real& tol_rel) {
  const mpfr_prec_t prec = q.precision();
  Complex sum = Complex::one(prec);

  Complex t = q;                       // q^{g_-(k)}, g_-(1) = 1
  Complex qk = q;                      // q^k
  Complex qstep = cpow_ui(q, 4);       // q^{3k+1}
  const Complex q3 = cpow_ui(q, 3);
  const Real one = Real::of(1L, prec);
  Real scratch(prec);
  Complex pair(prec);
  const long gate = real_exp_bound(tol_rel);

  int sign = -1;
  for (long k = 1;; ++k) {
    cset(pair, t);
    cmul_inplace(pair, qk, scratch);
    cadd_inplace(pair, t);
    if (sign > 0)
      cadd_inplace(sum, pair);
    else
      csub_inplace(sum, pair);
    // advance to k+1
    cmul_inplace(t, qstep, scratch);
    cmul_inplace(qstep, q3, scratch);
    cmul_inplace(qk, q, scratch);
    sign = -sign;
    // cheap exponent gate, then the rigorous geometric tail:
    // first omitted exponent g_-(k+1), later increments >= k+1
    if (mag_exp_bound(t) + 2 < gate + mag_exp_bound(sum)) {
      const unsigned long kk = static_cast<unsigned long>(k);
      const Real rt = pow_ui(qmag, (kk + 1) * (3 * kk + 2) / 2);
      const Real tail =
          rt / (one - pow_ui(qmag, kk + 1)) * Real::of(2L, prec);
      if (tail < tol_rel * max(one, abs_bound(sum))) break;
    }
    if (k > 100000000L)
      throw AccuracyError("pentagonal product failed to converge");
  }
  return sum;
}

Complex q_of_tau(const Complex& tau) {
  const Real t = two_pi(tau.precision());
  return exp(-(t * tau.im)) * cis(t * tau.re);
}

// eta(tau) = e^{pi i tau / 12} (q;q)_inf. The nome is the 24th power of the
// prefactor, so one complex exponential serves for both.
Complex eta_of(const Complex& tau, const Real& tol_rel) {
  const mpfr_prec_t prec = tau.precision();
  const Real pi = Real::pi(prec);
  const Complex pref =
      cexp(Complex(-(pi * tau.im), pi * tau.re) / Real::of(12L, prec));
  const Complex q = cpow_ui(pref, 24);
  return pref * pentagonal_product(q, abs(q), tol_rel);
}

Real default_tol_rel(mpfr_prec_t prec) {
  return Real::pow2(-static_cast<long>(prec) + 32, prec);
}

// ---- theta with certified tail ----------------------------------------------

CertifiedValue theta_sum(long a, long b, const Complex& q, const Real& qmag,
                         const Real& tol) {
  const mpfr_prec_t prec = q.precision();
  const Real one = Real::of(1L, prec);

  const long long e1 = (a + b) / 2;
  Complex qe = cpow_ui(q, static_cast<unsigned long long>(e1));
  // exponent gap e(n+1)-e(n) = a n + (a+b)/2
  Complex qgap = cpow_ui(q, static_cast<unsigned long long>(a + e1));
  const Complex qa = cpow_ui(q, static_cast<unsigned long long>(a));

  Complex sum = Complex::zero(prec);
  Real scratch(prec);
  const long gate = real_exp_bound(tol);
  int sign = -1;
  for (long long n = 1;; ++n) {
    if (sign > 0)
      cadd_inplace(sum, qe);
    else
      csub_inplace(sum, qe);
    cmul_inplace(qe, qgap, scratch);
    cmul_inplace(qgap, qa, scratch);
    sign = -sign;

    // qe now carries term n+1; scale >= 1, so the exponent gate is safe
    if (mag_exp_bound(qe) < gate) {
      const Real scale = max(one, abs_bound(sum));
      // geometric domination: increments grow, so the tail is at most
      // r^{e(n+1)}/(1 - r^{gap(n+1)}); the coarser sum |q|^{n/2} bound of
      // the minor-arc estimate is kept alongside.
      const unsigned long long e_next =
          static_cast<unsigned long long>((a * (n + 1) * (n + 1) + b * (n + 1)) / 2);
      const unsigned long long gap_next =
          static_cast<unsigned long long>(a * (n + 1) + e1);
      const Real sharp =
          pow_ui(qmag, e_next) / (one - pow_ui(qmag, gap_next));
      const Real coarse = sqrt(pow_ui(qmag, static_cast<unsigned long>(n + 1))) /
                          (one - sqrt(qmag));
      const Real certified = min(sharp, coarse);
      if (certified < tol * scale) return {sum, certified};
    }
    if (n > 100000000LL)
      throw AccuracyError("partial theta failed to converge");
  }
}

CertifiedValue string_kernel_sum(long m, const Complex& q, const Real& qmag,
                                 const Real& tol) {
  const mpfr_prec_t prec = q.precision();
  const Real one = Real::of(1L, prec);
  const Complex qm = cpow_ui(q, static_cast<unsigned long long>(m));
  const Real rm = pow_ui(qmag, static_cast<unsigned long>(m));

  Complex qe = qm;                     // q^{m n(n+1)/2}, n = 1
  Complex qgap = cpow_ui(q, 2 * static_cast<unsigned long long>(m));
  Complex qden = qm;                   // q^{m n}
  Complex sum = Complex::zero(prec);
  Complex term(prec);
  Real scratch(prec), d(prec);
  // the gate must absorb the 1/(1-r^m) denominator bound
  const long denom_exp = real_exp_bound(one - rm);
  const long gate = real_exp_bound(tol) + std::min(denom_exp, 0L);
  int sign = 1;
  for (long long n = 1;; ++n) {
    // term = qe / (1 - qden), written out with fused ops
    mpfr_ui_sub(term.re.raw(), 1, qden.re.raw(), MPFR_RNDN);
    mpfr_neg(term.im.raw(), qden.im.raw(), MPFR_RNDN);
    mpfr_fmma(d.raw(), term.re.raw(), term.re.raw(), term.im.raw(),
              term.im.raw(), MPFR_RNDN);
    mpfr_fmma(scratch.raw(), qe.re.raw(), term.re.raw(), qe.im.raw(),
              term.im.raw(), MPFR_RNDN);
    mpfr_fmms(term.im.raw(), qe.im.raw(), term.re.raw(), qe.re.raw(),
              term.im.raw(), MPFR_RNDN);
    mpfr_div(term.re.raw(), scratch.raw(), d.raw(), MPFR_RNDN);
    mpfr_div(term.im.raw(), term.im.raw(), d.raw(), MPFR_RNDN);
    if (sign > 0)
      cadd_inplace(sum, term);
    else
      csub_inplace(sum, term);
    cmul_inplace(qe, qgap, scratch);
    cmul_inplace(qgap, qm, scratch);
    cmul_inplace(qden, qm, scratch);
    sign = -sign;

    if (mag_exp_bound(qe) < gate) {
      const Real scale = max(one, abs_bound(sum));
      const unsigned long long mm = static_cast<unsigned long long>(m);
      const Real re = pow_ui(qmag, mm * (n + 1) * (n + 2) / 2);
      const Real rgap = pow_ui(qmag, mm * (n + 2));
      const Real tail = re / ((one - rm) * (one - rgap));
      if (tail < tol * scale) return {sum, tail};
    }
    if (n > 100000000LL)
      throw AccuracyError("string kernel failed to converge");
  }
}

Complex overpartition_gf_with_q(const ComplexTau& tau, const Complex& q,
                                const Real& tol_rel) {
  const mpfr_prec_t prec = tau.precision();
  const double y = tau.y().to_double();
  if (y < kInversionBranchY) {
    const Complex t = tau.tau();
    const Complex minus_one = -Complex::one(prec);
    const Complex inv_half = minus_one / (Real::of(2L, prec) * t);
    const Complex inv = minus_one / t;
    const Complex eta_top = eta_of(inv_half, tol_rel);
    const Complex eta_bot = eta_of(inv, tol_rel);
    // -i tau / 2 has positive real part on the upper half-plane
    const Complex root =
        csqrt(Complex(tau.y() / Real::of(2L, prec),
                      -(tau.x() / Real::of(2L, prec))));
    return root * eta_top / (eta_bot * eta_bot);
  }
  const Real qmag = abs(q);
  const Complex p1 = pentagonal_product(q, qmag, tol_rel);
  const Complex p2 = pentagonal_product(q * q, qmag * qmag, tol_rel);
  return p2 / (p1 * p1);
}

Complex euler_product_with_q(const ComplexTau& tau, const Complex& q,
                             const Real& tol_rel) {
  const mpfr_prec_t prec = tau.precision();
  const double y = tau.y().to_double();
  if (y < kInversionBranchY) {
    // (q;q)_inf = e^{-pi i tau/12} eta(-1/tau) / sqrt(-i tau)
    const Complex t = tau.tau();
    const Complex inv = -Complex::one(prec) / t;
    const Real pi = Real::pi(prec);
    const Real twelve = Real::of(12L, prec);
    const Complex pref =
        cexp(Complex(pi * tau.y() / twelve, -(pi * tau.x() / twelve)));
    const Complex root = csqrt(Complex(tau.y(), -tau.x()));
    return pref * eta_of(inv, tol_rel) / root;
  }
  return pentagonal_product(q, abs(q), tol_rel);
}

Complex string_diff_with_q(long k, const ComplexTau& tau, const Complex& q,
                           const Real& tol_abs) {
  const mpfr_prec_t prec = tau.precision();
  const Real qmag = abs(q);
  const Real tol_rel = default_tol_rel(prec);
  const Complex eq = overpartition_gf_with_q(tau, q, tol_rel);
  Real theta_tol = tol_abs;
  const Real eq_mag = max(abs(eq), Real::of(1L, prec));
  if (!(theta_tol.sign() > 0))
    theta_tol = Real::pow2(-static_cast<long>(prec) + 40, prec);
  else
    theta_tol = theta_tol / (Real::of(8L, prec) * eq_mag);
  const auto t1 = theta_sum(2, 4 * k - 2, q, qmag, theta_tol);
  const auto t2 = theta_sum(1, 4 * k - 1, q, qmag, theta_tol);
  const auto t3 = theta_sum(1, 4 * k - 3, q, qmag, theta_tol);
  const Complex bracket =
      Real::of(2L, prec) * t1.value - t2.value - t3.value;
  return eq * bracket;
}

Complex m_string_excess_with_q(long m, const ComplexTau& tau, const Complex& q,
                               const Real& tol_abs) {
  const mpfr_prec_t prec = tau.precision();
  const Real qmag = abs(q);
  const Real tol_rel = default_tol_rel(prec);
  const Complex ep = euler_product_with_q(tau, q, tol_rel);
  Real h_tol = tol_abs;
  if (!(h_tol.sign() > 0))
    h_tol = Real::pow2(-static_cast<long>(prec) + 40, prec);
  else
    h_tol = h_tol * abs(ep) / Real::of(4 * m, prec);
  const auto h1 = string_kernel_sum(1, q, qmag, h_tol);
  const auto hm = string_kernel_sum(m, q, qmag, h_tol);
  return (h1.value - Real::of(m, prec) * hm.value) / ep;
}

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo,
                     std::size_t hi, mpfr_prec_t prec) {
  if (lo >= hi) return Complex::zero(prec);
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid, prec) + pairwise_sum(v, mid, hi, prec);
}

Real contour_weight_exponent(Family fam, unsigned long N, mpfr_prec_t prec) {
  // 2 pi y N: pi sqrt(N)/2 for the string difference, pi sqrt(N/6) for the
  // m-string excess
  const Real pi = Real::pi(prec);
  const Real bigN = Real::of(static_cast<long>(N), prec);
  if (fam == Family::string_diff)
    return pi * sqrt(bigN) / Real::of(2L, prec);
  return pi * sqrt(bigN / Real::of(6L, prec));
}

}  // namespace

ComplexTau::ComplexTau(Real x, Real y) : x_(std::move(x)), y_(std::move(y)) {
  if (!(y_.sign() > 0))
    throw std::domain_error("tau must lie in the upper half-plane");
}

ComplexTau ComplexTau::on_contour(Family fam, unsigned long N, Real x) {
  const mpfr_prec_t prec = x.precision();
  const Real bigN = Real::of(static_cast<long>(N), prec);
  if (fam == Family::string_diff) {
    return ComplexTau(std::move(x),
                      Real::of(1L, prec) / (Real::of(4L, prec) * sqrt(bigN)));
  }
  return ComplexTau(
      std::move(x),
      Real::of(1L, prec) /
          (Real::of(2L, prec) * sqrt(Real::of(6L, prec) * bigN)));
}

Complex ComplexTau::q() const { return q_of_tau(tau()); }

Real ComplexTau::q_magnitude() const {
  return exp(-(two_pi(precision()) * y_));
}

CertifiedValue partial_theta_at(long a, long b, const ComplexTau& tau,
                                const Real& tol) {
  qseries::PartialThetaSpec spec(a, b);  // validates a, b
  if (!(tol.sign() > 0)) throw std::domain_error("tolerance must be positive");
  return theta_sum(spec.a, spec.b, tau.q(), tau.q_magnitude(), tol);
}

Complex overpartition_gf_at(const ComplexTau& tau) {
  return overpartition_gf_with_q(tau, tau.q(),
                                 default_tol_rel(tau.precision()));
}

Complex euler_product_at(const ComplexTau& tau) {
  return euler_product_with_q(tau, tau.q(), default_tol_rel(tau.precision()));
}

CertifiedValue string_kernel_at(long m, const ComplexTau& tau,
                                const Real& tol) {
  if (m < 1) throw std::invalid_argument("kernel dilation must be positive");
  if (!(tol.sign() > 0)) throw std::domain_error("tolerance must be positive");
  return string_kernel_sum(m, tau.q(), tau.q_magnitude(), tol);
}

Complex string_diff_gf_at(long k, const ComplexTau& tau) {
  return string_diff_gf_at(k, tau, Real(tau.precision()));
}

Complex string_diff_gf_at(long k, const ComplexTau& tau, const Real& tol_abs) {
  if (k < 1) throw std::invalid_argument("string start index k must be >= 1");
  return string_diff_with_q(k, tau, tau.q(), tol_abs);
}

Complex m_string_excess_gf_at(long m, const ComplexTau& tau) {
  return m_string_excess_gf_at(m, tau, Real(tau.precision()));
}

Complex m_string_excess_gf_at(long m, const ComplexTau& tau,
                              const Real& tol_abs) {
  if (m < 2) throw std::invalid_argument("string excess needs m >= 2");
  return m_string_excess_with_q(m, tau, tau.q(), tol_abs);
}

Complex theta_quadratic_expansion(long a, long b, const Complex& tau) {
  const mpfr_prec_t prec = tau.precision();
  const Real pi2 = two_pi(prec);
  const Complex w(pi2 * tau.im, -(pi2 * tau.re));  // -2 pi i tau
  const Complex half = Complex::of(-0.5, 0.0, prec);
  // coefficients L(0) = -1/2, -L(-1) = b/8, L(-2)/2! = ab/32 from the eta
  // values eta(-1) = 1/4, eta(-3) = -1/8
  return half + Real::of(b, prec) / Real::of(8L, prec) * w +
         Real::of(a * b, prec) / Real::of(32L, prec) * (w * w);
}

std::vector<ResidualRow> quadratic_expansion_residual(
    long a, long b, const std::vector<Real>& y_grid, double x_over_y,
    mpfr_prec_t prec) {
  qseries::PartialThetaSpec spec(a, b);
  std::vector<ResidualRow> rows;
  rows.reserve(y_grid.size());
  const Real tol = Real::pow2(-static_cast<long>(prec) + 96, prec);
  for (const Real& y0 : y_grid) {
    const Real y = y0.at_precision(prec);
    const Real x = Real::of(x_over_y, prec) * y;
    const ComplexTau tau(x, y);
    const auto f = partial_theta_at(spec.a, spec.b, tau, tol);
    const Complex expansion = theta_quadratic_expansion(a, b, tau.tau());
    const Real residual = abs(f.value - expansion);
    rows.push_back({y, residual, residual / (y * y * y)});
  }
  return rows;
}

NearOneReport near_one_check(Family fam, long parameter, unsigned long N,
                             int half_grid_points) {
  const mpfr_prec_t prec = asym::auto_precision(N);
  const Real pi = Real::pi(prec);
  const Real bigN = Real::of(static_cast<long>(N), prec);
  const Real one = Real::of(1L, prec);

  // uniform error scale of the near-1 estimate
  Real scale(prec);
  if (fam == Family::string_diff)
    scale = pow(bigN, Real::of(-1.75, prec)) *
            exp(pi * sqrt(bigN) / Real::of(2L, prec));
  else
    scale = pow(bigN, Real::of(-0.75, prec)) *
            exp(pi * sqrt(bigN / Real::of(6L, prec)));

  const ComplexTau center = ComplexTau::on_contour(fam, N, Real(prec));
  const Real y = center.y();

  Real max_dev(prec);
  Real rel_center(prec);
  for (int i = -half_grid_points; i <= half_grid_points; ++i) {
    const Real x =
        y * Real::of(static_cast<long>(i), prec) /
        Real::of(static_cast<long>(std::max(half_grid_points, 1)), prec);
    const ComplexTau tau(x, y);
    Complex numeric(prec);
    Complex main(prec);
    const Complex t = tau.tau();
    const Real pi2 = two_pi(prec);
    const Complex w(pi2 * tau.y(), -(pi2 * tau.x()));  // -2 pi i tau
    if (fam == Family::string_diff) {
      numeric = string_diff_gf_at(parameter, tau);
      // (2k-1)/(16 sqrt(pi)) (-2 pi i tau)^{5/2} e^{pi i/(8 tau)}; the
      // prefactor matches the ab/32 quadratic term of the theta expansion
      const Complex arg =
          Complex(Real(prec), pi) / (Real::of(8L, prec) * t);
      main = Real::of(2 * parameter - 1, prec) /
             (Real::of(16L, prec) * sqrt(pi)) * cpow_half(w, 5) * cexp(arg);
    } else {
      numeric = m_string_excess_gf_at(parameter, tau);
      // (m-1)/(8 sqrt(2 pi)) (-2 pi i tau)^{1/2} e^{pi i/(12 tau)}
      const Complex arg =
          Complex(Real(prec), pi) / (Real::of(12L, prec) * t);
      main = Real::of(parameter - 1, prec) /
             (Real::of(8L, prec) * sqrt(Real::of(2L, prec) * pi)) *
             cpow_half(w, 1) * cexp(arg);
    }
    const Real dev = abs(numeric - main);
    max_dev = max(max_dev, dev);
    if (i == 0) rel_center = dev / abs(main);
  }
  const Real ratio = max_dev / scale;
  return {fam,        parameter, N,     max_dev,
          scale,      ratio,     rel_center,
          ratio > Real::of(10L, prec) * one};
}

unsigned long default_contour_points(unsigned long N) {
  const double v = 8.0 * static_cast<double>(N) * std::sqrt(static_cast<double>(N));
  return static_cast<unsigned long>(std::ceil(v));
}

ContourReport contour_coefficient(Family fam, long parameter, unsigned long N,
                                  unsigned long n_points, mpfr_prec_t prec,
                                  const BigInt& exact) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (n_points < default_contour_points(N))
    throw std::invalid_argument(
        "n_points below the 8 N sqrt(N) floor for N = " + std::to_string(N));
  const mpfr_prec_t work =
      std::max(prec, asym::auto_precision(N, Real::kMinPrecision + 8));
  const Real pi2 = two_pi(work);
  const unsigned long M = n_points;

  const ComplexTau probe = ComplexTau::on_contour(fam, N, Real(work));
  const Real y = probe.y();
  // per-node absolute budget: e^{-2 pi y N} 2^{-40}
  const Real weight_exp = contour_weight_exponent(fam, N, work);
  const Real node_tol = exp(-weight_exp) * Real::pow2(-40, work);

  std::vector<Complex> major_terms(M, Complex::zero(work));
  std::vector<Complex> minor_terms(M, Complex::zero(work));

  const long long Nll = static_cast<long long>(N);
  const long long Mll = static_cast<long long>(M);
  bool failed = false;
  std::string failure;

#pragma omp parallel for schedule(static)
  for (long long j = 0; j < Mll; ++j) {
    try {
      const Real xj = Real::of(static_cast<long>(j), work) /
                          Real::of(static_cast<long>(M), work) -
                      Real::of(1L, work) / Real::of(2L, work);
      const ComplexTau tau(xj, y);
      Complex value(work);
      if (fam == Family::string_diff)
        value = string_diff_gf_at(parameter, tau, node_tol);
      else
        value = m_string_excess_gf_at(parameter, tau, node_tol);
      // e^{-2 pi i N x_j} with the angle reduced exactly: N x_j = N j/M - N/2
      const long long t = (Nll % Mll) * (j % Mll) % Mll;
      const Real angle = -(pi2 * Real::of(static_cast<long>(t), work) /
                           Real::of(static_cast<long>(M), work));
      Complex phase = cis(angle);
      if (N % 2 == 1) phase = -phase;  // e^{pi i N}
      const Complex contrib = value * phase;
      if (abs(xj) > y)
        minor_terms[static_cast<std::size_t>(j)] = contrib;
      else
        major_terms[static_cast<std::size_t>(j)] = contrib;
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        failure = e.what();
      }
    }
  }
  if (failed) throw AccuracyError("contour node evaluation failed: " + failure);

  // deterministic pairwise reduction over the fixed node order
  const Real norm = exp(weight_exp) / Real::of(static_cast<long>(M), work);
  const Complex i_major =
      norm * pairwise_sum(major_terms, 0, major_terms.size(), work);
  const Complex i_minor =
      norm * pairwise_sum(minor_terms, 0, minor_terms.size(), work);
  const Complex total = i_major + i_minor;

  const Real residue = abs(total.im);
  if (residue > Real::of(1e-6, work)) {
    throw AccuracyError(
        "contour imaginary residue " + residue.str(6) + " above 1e-6 at N = " +
        std::to_string(N) + " with n_points = " + std::to_string(n_points));
  }
  const BigInt rounded = total.re.round_to_integer();
  return {fam,     parameter, N,
          M,       work,      ContourSplit{i_major, i_minor, total},
          residue, rounded,   exact,
          rounded == exact};
}

MinorArcReport minor_arc_check(Family fam, long parameter, unsigned long N,
                               int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("grid needs >= 2 points");
  const mpfr_prec_t prec = asym::auto_precision(N);
  const Real one = Real::of(1L, prec);
  const ComplexTau probe = ComplexTau::on_contour(fam, N, Real(prec));
  const Real y = probe.y();
  const Real half = one / Real::of(2L, prec);

  Real max_minor(prec);
  for (int i = 0; i < grid_points; ++i) {
    const Real frac = Real::of(static_cast<long>(i), prec) /
                      Real::of(static_cast<long>(grid_points - 1), prec);
    const Real x = y + (half - y) * frac;
    const ComplexTau tau(x, y);
    const Real v = (fam == Family::string_diff)
                       ? abs(string_diff_gf_at(parameter, tau))
                       : abs(m_string_excess_gf_at(parameter, tau));
    max_minor = max(max_minor, v);
  }

  Real max_major(prec);
  for (int i = -2; i <= 2; ++i) {
    const Real x = y * Real::of(static_cast<long>(i), prec) / Real::of(2L, prec);
    const ComplexTau tau(x, y);
    const Real v = (fam == Family::string_diff)
                       ? abs(string_diff_gf_at(parameter, tau))
                       : abs(m_string_excess_gf_at(parameter, tau));
    max_major = max(max_major, v);
  }

  const Real pi = Real::pi(prec);
  const Real bigN = Real::of(static_cast<long>(N), prec);
  Real envelope(prec);
  if (fam == Family::string_diff)
    envelope = sqrt(bigN) * exp(pi * sqrt(bigN) / Real::of(4L, prec));
  else
    envelope = pow(bigN, Real::of(0.75, prec)) *
               exp(pi / Real::of(2L, prec) * sqrt(bigN / Real::of(6L, prec)));
  return {fam, parameter, N, max_minor, max_major, envelope,
          max_minor / envelope};
}

Real bessel_line_check(long two_s, unsigned long N) {
  if (two_s % 2 == 0 || two_s < 1)
    throw std::invalid_argument("order must be a positive half-integer");
  const mpfr_prec_t prec = asym::auto_precision(N);
  const Real pi = Real::pi(prec);
  const Real z = pi * sqrt(Real::of(static_cast<long>(N), prec));
  const Real c = z / Real::of(2L, prec);  // (pi/2) sqrt(N)

  // Simpson rule over v = 1 + it, t in [-1, 1]
  const long M = 4096;
  const Real h = Real::of(2L, prec) / Real::of(M, prec);
  Complex acc = Complex::zero(prec);
  for (long i = 0; i <= M; ++i) {
    const Real t = Real::of(-1L, prec) + h * Real::of(i, prec);
    const Complex v = Complex(Real::of(1L, prec), t);
    const Complex f =
        cpow_half(v, two_s) * cexp(c * (v + Complex::one(prec) / v));
    const long w = (i == 0 || i == M) ? 1 : (i % 2 == 1 ? 4 : 2);
    acc += Real::of(w, prec) * f;
  }
  // (1/(2 pi i)) * i * Simpson  ->  Simpson / (2 pi)
  const Complex integral =
      (h / Real::of(3L, prec) / (Real::of(2L, prec) * pi)) * acc;
  const Real target = asym::bessel_I_half(-two_s - 2, z);
  return abs(integral - Complex(target, Real(prec))) / abs(target);
}

}  // namespace ostrings::circle
