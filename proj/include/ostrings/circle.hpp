#pragma once

#include <vector>

#include "ostrings/bigint.hpp"
#include "ostrings/complexnum.hpp"

namespace ostrings::circle {

/// Which generating function lives on the contour: the odd-minus-even
/// string difference (circle |q| = e^{-pi/(2 sqrt N)}) or the m-string
/// excess (circle |q| = e^{-pi/sqrt(6N)}).
enum class Family { string_diff, m_string_excess };

class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point tau = x + iy in the upper half-plane, q = e^{2 pi i tau}.
class ComplexTau {
 public:
  ComplexTau(Real x, Real y);

  /// Contour point with y fixed by the family's circle radius.
  static ComplexTau on_contour(Family fam, unsigned long N, Real x);

  const Real& x() const { return x_; }
  const Real& y() const { return y_; }
  mpfr_prec_t precision() const { return x_.precision(); }

  Complex tau() const { return {x_, y_}; }
  Complex q() const;
  /// |q| = e^{-2 pi y}.
  Real q_magnitude() const;

 private:
  Real x_, y_;
};

/// Sum value plus a rigorous upper bound on the discarded tail.
struct CertifiedValue {
  Complex value;
  Real tail_bound;
};

/// Partial theta sum_{n>=1} (-1)^n q^{(a n^2 + b n)/2} summed until the
/// certified geometric tail bound drops below tol * max(1, |partial sum|).
CertifiedValue partial_theta_at(long a, long b, const ComplexTau& tau,
                                const Real& tol);

/// (-q)_inf/(q)_inf. For y < 0.1 the eta-inversion form
/// sqrt(-i tau / 2) eta(-1/(2 tau)) / eta(-1/tau)^2 (fast near q = 1);
/// otherwise the direct sparse product form.
Complex overpartition_gf_at(const ComplexTau& tau);

/// (q;q)_inf with the same branch rule.
Complex euler_product_at(const ComplexTau& tau);

/// String kernel h(q^m) from its Lambert form with certified tail.
CertifiedValue string_kernel_at(long m, const ComplexTau& tau,
                                const Real& tol);

/// Numeric odd-minus-even string difference generating function; tol_abs = 0
/// picks an absolute budget of relative size 2^-(P-40).
Complex string_diff_gf_at(long k, const ComplexTau& tau);
Complex string_diff_gf_at(long k, const ComplexTau& tau, const Real& tol_abs);

/// Numeric m-string excess generating function.
Complex m_string_excess_gf_at(long m, const ComplexTau& tau);
Complex m_string_excess_gf_at(long m, const ComplexTau& tau,
                              const Real& tol_abs);

/// Quadratic small-tau expansion of the partial theta:
/// -1/2 + (b/8)(-2 pi i tau) + (a b/16)(-2 pi i tau)^2.
Complex theta_quadratic_expansion(long a, long b, const Complex& tau);

struct ResidualRow {
  Real y;
  Real residual;
  Real residual_over_y3;
};

/// Residual of the quadratic expansion at tau = y(x_over_y + i) per grid
/// point; residual/y^3 must stay bounded as y -> 0.
std::vector<ResidualRow> quadratic_expansion_residual(
    long a, long b, const std::vector<Real>& y_grid, double x_over_y = 0.0,
    mpfr_prec_t prec = 256);

/// Near-q=1 comparison of the numeric value against the proposition-style
/// main term over a grid |x| <= y. Deviations are measured against the
/// uniform error scale (N^{-7/4} e^{pi sqrt(N)/2} resp.
/// N^{-3/4} e^{pi sqrt(N/6)}); the main term itself decays toward the strip
/// edge, so pointwise relative deviation is reported only at x = 0.
struct NearOneReport {
  Family fam;
  long parameter;
  unsigned long N;
  Real max_abs_deviation;
  Real error_scale;
  Real deviation_over_scale;  // flag when above the safety factor 10
  Real rel_deviation_at_center;
  bool flagged;
};

NearOneReport near_one_check(Family fam, long parameter, unsigned long N,
                             int half_grid_points = 2);

/// Major/minor decomposition of the Cauchy integral and the recovered
/// coefficient.
struct ContourSplit {
  Complex major;
  Complex minor;
  Complex total;
};

struct ContourReport {
  Family fam;
  long parameter;
  unsigned long N;
  unsigned long n_points;
  mpfr_prec_t precision_bits;
  ContourSplit split;
  Real imag_residue;
  BigInt rounded;
  BigInt exact;
  bool match;
};

/// Node-count floor 8 N sqrt(N) that resolves the e^{-2 pi i N x} twist.
unsigned long default_contour_points(unsigned long N);

/// Trapezoidal quadrature of the coefficient integral over the full circle,
/// reported with the |x| <= y (major) / |x| > y (minor) split. Throws
/// AccuracyError when the imaginary residue exceeds 1e-6.
ContourReport contour_coefficient(Family fam, long parameter, unsigned long N,
                                  unsigned long n_points, mpfr_prec_t prec,
                                  const BigInt& exact);

/// Sampled sup of |gf| on the minor arc y <= |x| <= 1/2, normalised by the
/// proved envelope (N^{1/2} e^{pi sqrt(N)/4} resp.
/// N^{3/4} e^{(pi/2) sqrt(N/6)}). Ratios are recorded, not asserted.
struct MinorArcReport {
  Family fam;
  long parameter;
  unsigned long N;
  Real max_minor;
  Real max_major;
  Real envelope;
  Real minor_over_envelope;
};

MinorArcReport minor_arc_check(Family fam, long parameter, unsigned long N,
                               int grid_points = 33);

/// Numeric line integral (2 pi i)^{-1} int_{1-i}^{1+i} v^{s}
/// e^{(pi/2) sqrt(N) (v + 1/v)} dv for s = two_s/2, compared with
/// I_{-s-1}(pi sqrt N). Returns the relative difference.
Real bessel_line_check(long two_s, unsigned long N);

}  // namespace ostrings::circle
