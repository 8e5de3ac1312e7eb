#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ostrings/bigint.hpp"

namespace ostrings::qseries {

class OrderMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Formal power series in q truncated at an explicit order T: exactly T+1
/// integer coefficients, index n = coefficient of q^n. All arithmetic is
/// exact; binary operations demand equal orders.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
  BigInt& operator[](std::size_t n) { return coeffs_.at(n); }

  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Copy truncated to a (weakly) smaller order.
  TruncatedSeries truncated(std::size_t new_order) const;

  /// Substitution q -> q^m, written out to order `out_order`.
  TruncatedSeries dilated(long m, std::size_t out_order) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// One monomial of a sparse series; coefficients of the sparse generating
/// functions here are tiny (|c| <= 3), so a machine word suffices.
struct SparseTerm {
  long long exponent;
  long coeff;
};
using SparseSeries = std::vector<SparseTerm>;

// ---- arithmetic -----------------------------------------------------------

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scaled(const TruncatedSeries& a, long c);

/// Exact Cauchy product truncated at the common order. The parallel kernel
/// assigns whole output coefficients to threads, so results are bit-identical
/// to mul_serial for every thread count.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to the order, by the triangular recurrence.
/// Requires constant coefficient +1 or -1.
TruncatedSeries invert(const TruncatedSeries& s);

/// s times a sparse series (parallel over output index / serial reference).
TruncatedSeries mul_sparse(const TruncatedSeries& s, const SparseSeries& t);
TruncatedSeries mul_sparse_serial(const TruncatedSeries& s,
                                  const SparseSeries& t);

/// s divided by a sparse series with unit constant term, by the forward
/// recurrence u[n] = s0 * (s[n] - sum_{e>0} c_e u[n-e]).
TruncatedSeries div_sparse(const TruncatedSeries& s, const SparseSeries& t);

/// s times the string kernel h(q^m), via the Lambert-type expansion
/// h(q^m) = sum_{n>=1} (-1)^{n+1} q^{m n(n+1)/2} / (1 - q^{mn}): each n
/// contributes a strided running sum of s, costing O(T sqrt(T/m)) additions
/// overall instead of the dense O(T^2) product.
TruncatedSeries mul_string_kernel(const TruncatedSeries& s, long m);
TruncatedSeries mul_string_kernel_serial(const TruncatedSeries& s, long m);

// ---- sparse building blocks -----------------------------------------------

/// Pentagonal-number expansion of (q^d; q^d)_inf: terms (-1)^k at exponents
/// d*k(3k-+1)/2, sorted by exponent, constant term included.
SparseSeries pentagonal_terms(std::size_t order, long dilation = 1);

/// Parameters (a, b) of the partial theta sum_{n>=1} (-1)^n q^{(a n^2 + b n)/2}.
/// Requires a > 0, a + b > 0 and a + b even so every exponent is a
/// non-negative integer.
struct PartialThetaSpec {
  long a;
  long b;
  PartialThetaSpec(long a_, long b_);
};

SparseSeries partial_theta_terms(const PartialThetaSpec& spec,
                                 std::size_t order);

/// The sparse theta combination whose coefficients, convolved with the
/// overpartition counts, give the odd-minus-even string difference for
/// strings starting at 2k-1:
///   2 f_{0,2,4k-2} - f_{0,1,4k-1} - f_{0,1,4k-3},  f = partial theta.
SparseSeries string_diff_theta_terms(long k, std::size_t order);

// ---- named generating functions -------------------------------------------

/// (q;q)_inf with O(sqrt T) nonzero coefficients.
TruncatedSeries euler_pochhammer(std::size_t order);

/// 1/(q;q)_inf: partition counts.
TruncatedSeries partition_gf(std::size_t order);

/// (-q;q)_inf/(q;q)_inf = (q^2;q^2)_inf/(q;q)_inf^2: overpartition counts,
/// computed by two sparse divisions.
TruncatedSeries overpartition_gf(std::size_t order);

TruncatedSeries partial_theta(const PartialThetaSpec& spec, std::size_t order);

/// String kernel h(q^m) in its bounded-run form
///   h(q) = sum_{j>=1} q^{j^2} (1 + 2q^j + ... + 2q^{j^2-j} + q^{j^2}).
TruncatedSeries string_kernel(long m, std::size_t order);

/// Same kernel from the Lambert form sum (-1)^{n+1} q^{n(n+1)/2}/(1-q^n);
/// must agree with string_kernel coefficient-for-coefficient.
TruncatedSeries string_kernel_lambert(long m, std::size_t order);

/// Generating function of the odd-minus-even string difference at start
/// 2k-1 (coefficient n counts strings along overpartitions of n).
TruncatedSeries string_diff_gf(long k, std::size_t order);
TruncatedSeries string_diff_gf(long k, const TruncatedSeries& overpartitions);

/// Weighted m-string count along ordinary partitions: h(q^m)/(q;q)_inf.
TruncatedSeries m_string_count_gf(long m, std::size_t order);

/// (C_1(n) - m C_m(n)) series: (h(q) - m h(q^m))/(q;q)_inf, m >= 2.
TruncatedSeries m_string_excess_gf(long m, std::size_t order);

/// ospt-bar series: (-q)_inf/(q)_inf * (h(q) - 2 h(q^2)).
TruncatedSeries ospt_bar_series(std::size_t order);
TruncatedSeries ospt_bar_series(const TruncatedSeries& overpartitions);

}  // namespace ostrings::qseries
