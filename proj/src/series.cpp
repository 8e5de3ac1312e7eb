#include "ostrings/series.hpp"

#include <algorithm>
#include <map>

namespace ostrings::qseries {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatchError("series orders differ: " +
                             std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
}

}  // namespace

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw OrderMismatchError("cannot truncate upward");
  TruncatedSeries out(new_order);
  for (std::size_t n = 0; n <= new_order; ++n) out[n] = coeffs_[n];
  return out;
}

TruncatedSeries TruncatedSeries::dilated(long m, std::size_t out_order) const {
  if (m < 1) throw std::invalid_argument("dilation must be positive");
  TruncatedSeries out(out_order);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    unsigned long long e = static_cast<unsigned long long>(n) * m;
    if (e > out_order) break;
    out[static_cast<std::size_t>(e)] = coeffs_[n];
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

TruncatedSeries scaled(const TruncatedSeries& a, long c) {
  TruncatedSeries out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] * c;
  return out;
}

TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const long T = static_cast<long>(a.order());
  TruncatedSeries out(a.order());
  for (long n = 0; n <= T; ++n) {
    BigInt acc = 0;
    for (long i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    out[n] = std::move(acc);
  }
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const long T = static_cast<long>(a.order());
  TruncatedSeries out(a.order());
  // Each output coefficient is summed in a fixed order by exactly one
  // thread, so the result matches mul_serial bit for bit.
#pragma omp parallel for schedule(static)
  for (long n = 0; n <= T; ++n) {
    BigInt acc = 0;
    for (long i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    out[n] = std::move(acc);
  }
  return out;
}

TruncatedSeries invert(const TruncatedSeries& s) {
  const long T = static_cast<long>(s.order());
  if (s[0] != 1 && s[0] != -1)
    throw NotInvertibleError("constant coefficient must be +1 or -1");
  const long sign = (s[0] == 1) ? 1 : -1;
  TruncatedSeries out(s.order());
  out[0] = sign;
  BigInt acc;
  for (long n = 1; n <= T; ++n) {
    acc = 0;
    for (long i = 1; i <= n; ++i) acc += s[i] * out[n - i];
    out[n] = -sign * acc;
  }
  return out;
}

TruncatedSeries mul_sparse_serial(const TruncatedSeries& s,
                                  const SparseSeries& t) {
  const long T = static_cast<long>(s.order());
  TruncatedSeries out(s.order());
  for (long n = 0; n <= T; ++n) {
    BigInt acc = 0;
    for (const auto& term : t) {
      if (term.exponent > n) break;
      acc += term.coeff * s[n - term.exponent];
    }
    out[n] = std::move(acc);
  }
  return out;
}

TruncatedSeries mul_sparse(const TruncatedSeries& s, const SparseSeries& t) {
  const long T = static_cast<long>(s.order());
  TruncatedSeries out(s.order());
#pragma omp parallel for schedule(static)
  for (long n = 0; n <= T; ++n) {
    BigInt acc = 0;
    for (const auto& term : t) {
      if (term.exponent > n) break;
      acc += term.coeff * s[n - term.exponent];
    }
    out[n] = std::move(acc);
  }
  return out;
}

TruncatedSeries div_sparse(const TruncatedSeries& s, const SparseSeries& t) {
  const long T = static_cast<long>(s.order());
  if (t.empty() || t.front().exponent != 0 ||
      (t.front().coeff != 1 && t.front().coeff != -1))
    throw NotInvertibleError("sparse divisor needs unit constant term");
  const long sign = t.front().coeff;
  TruncatedSeries out(s.order());
  BigInt acc;
  for (long n = 0; n <= T; ++n) {
    acc = s[n];
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i].exponent > n) break;
      acc -= t[i].coeff * out[n - t[i].exponent];
    }
    out[n] = sign * acc;
  }
  return out;
}

namespace {

// s * h(q^m) via strided running sums. The contribution of Lambert index nn
// lands on exponents base + j*step (base = m*nn(nn+1)/2, step = m*nn), and
// within one residue class mod step the partial sums accumulate, so the
// classes are independent chains. Parallelising over classes touches each
// output coefficient once per nn, in a fixed order: bit-identical again.
template <bool Parallel>
TruncatedSeries mul_string_kernel_impl(const TruncatedSeries& s, long m) {
  if (m < 1) throw std::invalid_argument("kernel dilation must be positive");
  const long long T = static_cast<long long>(s.order());
  TruncatedSeries out(s.order());
  for (long long nn = 1; m * nn * (nn + 1) / 2 <= T; ++nn) {
    const long long base = m * nn * (nn + 1) / 2;
    const long long step = m * nn;
    const int sign = (nn % 2 == 1) ? 1 : -1;
    const long long residues = std::min<long long>(step, T - base + 1);
#pragma omp parallel for schedule(static) if (Parallel)
    for (long long r = 0; r < residues; ++r) {
      BigInt acc = 0;
      for (long long i = base + r; i <= T; i += step) {
        acc += s[i - base];
        if (sign > 0)
          out[i] += acc;
        else
          out[i] -= acc;
      }
    }
  }
  return out;
}

}  // namespace

TruncatedSeries mul_string_kernel(const TruncatedSeries& s, long m) {
  return mul_string_kernel_impl<true>(s, m);
}

TruncatedSeries mul_string_kernel_serial(const TruncatedSeries& s, long m) {
  return mul_string_kernel_impl<false>(s, m);
}

SparseSeries pentagonal_terms(std::size_t order, long dilation) {
  const long long T = static_cast<long long>(order);
  SparseSeries out;
  out.push_back({0, 1});
  for (long long k = 1;; ++k) {
    const long long e1 = dilation * k * (3 * k - 1) / 2;
    if (e1 > T) break;
    const long c = (k % 2 == 1) ? -1 : 1;
    out.push_back({e1, c});
    const long long e2 = dilation * k * (3 * k + 1) / 2;
    if (e2 <= T) out.push_back({e2, c});
  }
  return out;
}

PartialThetaSpec::PartialThetaSpec(long a_, long b_) : a(a_), b(b_) {
  if (a <= 0) throw std::invalid_argument("partial theta requires a > 0");
  if (a + b <= 0) throw std::invalid_argument("partial theta requires a+b > 0");
  if ((a + b) % 2 != 0)
    throw std::invalid_argument(
        "partial theta exponents (a n^2 + b n)/2 must be integers: a+b even");
}

SparseSeries partial_theta_terms(const PartialThetaSpec& spec,
                                 std::size_t order) {
  const long long T = static_cast<long long>(order);
  SparseSeries out;
  // exponents are strictly increasing in n, so stop at the first overshoot
  for (long long n = 1;; ++n) {
    const long long e = (spec.a * n * n + spec.b * n) / 2;
    if (e > T) break;
    out.push_back({e, (n % 2 == 1) ? -1L : 1L});
  }
  return out;
}

SparseSeries string_diff_theta_terms(long k, std::size_t order) {
  if (k < 1) throw std::invalid_argument("string start index k must be >= 1");
  std::map<long long, long> acc;
  const auto add_terms = [&](const PartialThetaSpec& spec, long scale) {
    for (const auto& t : partial_theta_terms(spec, order))
      acc[t.exponent] += scale * t.coeff;
  };
  add_terms(PartialThetaSpec(2, 4 * k - 2), 2);
  add_terms(PartialThetaSpec(1, 4 * k - 1), -1);
  add_terms(PartialThetaSpec(1, 4 * k - 3), -1);
  SparseSeries out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  return out;
}

TruncatedSeries euler_pochhammer(std::size_t order) {
  TruncatedSeries out(order);
  for (const auto& t : pentagonal_terms(order))
    out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  return out;
}

TruncatedSeries partition_gf(std::size_t order) {
  return div_sparse(TruncatedSeries::one(order), pentagonal_terms(order));
}

TruncatedSeries overpartition_gf(std::size_t order) {
  TruncatedSeries num(order);
  for (const auto& t : pentagonal_terms(order, 2))
    num[static_cast<std::size_t>(t.exponent)] = t.coeff;
  const auto pent = pentagonal_terms(order);
  return div_sparse(div_sparse(num, pent), pent);
}

TruncatedSeries partial_theta(const PartialThetaSpec& spec,
                              std::size_t order) {
  TruncatedSeries out(order);
  for (const auto& t : partial_theta_terms(spec, order))
    out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  return out;
}

TruncatedSeries string_kernel(long m, std::size_t order) {
  if (m < 1) throw std::invalid_argument("kernel dilation must be positive");
  const long long T = static_cast<long long>(order);
  TruncatedSeries out(order);
  for (long long j = 1; m * j * j <= T; ++j) {
    for (long long i = 0; i <= j; ++i) {
      const long long e = m * (j * j + i * j);
      if (e > T) break;
      out[static_cast<std::size_t>(e)] += (i == 0 || i == j) ? 1 : 2;
    }
  }
  return out;
}

TruncatedSeries string_kernel_lambert(long m, std::size_t order) {
  if (m < 1) throw std::invalid_argument("kernel dilation must be positive");
  const long long T = static_cast<long long>(order);
  TruncatedSeries out(order);
  for (long long n = 1; m * n * (n + 1) / 2 <= T; ++n) {
    const int sign = (n % 2 == 1) ? 1 : -1;
    for (long long e = m * n * (n + 1) / 2; e <= T; e += m * n)
      out[static_cast<std::size_t>(e)] += sign;
  }
  return out;
}

TruncatedSeries string_diff_gf(long k, std::size_t order) {
  return string_diff_gf(k, overpartition_gf(order));
}

TruncatedSeries string_diff_gf(long k, const TruncatedSeries& overpartitions) {
  return mul_sparse(overpartitions,
                    string_diff_theta_terms(k, overpartitions.order()));
}

TruncatedSeries m_string_count_gf(long m, std::size_t order) {
  return div_sparse(string_kernel(m, order), pentagonal_terms(order));
}

TruncatedSeries m_string_excess_gf(long m, std::size_t order) {
  if (m < 2) throw std::invalid_argument("string excess needs m >= 2");
  const auto diff = sub(string_kernel(1, order), scaled(string_kernel(m, order), m));
  return div_sparse(diff, pentagonal_terms(order));
}

TruncatedSeries ospt_bar_series(std::size_t order) {
  return ospt_bar_series(overpartition_gf(order));
}

TruncatedSeries ospt_bar_series(const TruncatedSeries& overpartitions) {
  return sub(mul_string_kernel(overpartitions, 1),
             scaled(mul_string_kernel(overpartitions, 2), 2));
}

}  // namespace ostrings::qseries
