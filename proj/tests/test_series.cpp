#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <random>
#include <vector>

#include "ostrings/combinatorics.hpp"
#include "ostrings/series.hpp"

using namespace ostrings;
using namespace ostrings::qseries;

namespace {

// Independent oracle: dense expansion of the finite product
// prod_{i=1..T} (1 - q^i), which agrees with (q;q)_inf up to order T.
TruncatedSeries finite_euler_product(std::size_t T) {
  TruncatedSeries out = TruncatedSeries::one(T);
  for (std::size_t i = 1; i <= T; ++i) {
    TruncatedSeries next(T);
    for (std::size_t n = 0; n <= T; ++n) {
      next[n] = out[n];
      if (n >= i) next[n] -= out[n - i];
    }
    out = next;
  }
  return out;
}

TruncatedSeries from_ints(const std::vector<long>& v) {
  TruncatedSeries s(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i];
  return s;
}

}  // namespace

TEST_CASE("cauchy product basics") {
  auto a = from_ints({1, 1, 0});   // 1 + q
  auto b = from_ints({1, -1, 0});  // 1 - q
  auto p = mul(a, b);
  CHECK(p == from_ints({1, 0, -1}));

  auto s = from_ints({3, -2, 7, 1});
  CHECK(mul(s, TruncatedSeries::one(3)) == s);

  CHECK_THROWS_AS(mul(s, TruncatedSeries::one(5)), OrderMismatchError);
}

TEST_CASE("invert: geometric series, identity, euler product") {
  CHECK(invert(from_ints({1, -1, 0, 0, 0})) == from_ints({1, 1, 1, 1, 1}));
  CHECK(invert(TruncatedSeries::one(4)) == TruncatedSeries::one(4));

  // partition numbers p(0..8)
  auto p = invert(euler_pochhammer(8));
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(p[n] == expected[n]);

  // enumeration agrees (p(4) = 5 among them)
  for (unsigned n = 0; n <= 8; ++n)
    CHECK(p[n] == static_cast<long>(comb::enumerate_partitions(n).size()));

  CHECK_THROWS_AS(invert(from_ints({2, 1, 1})), NotInvertibleError);
}

TEST_CASE("euler product by pentagonal numbers") {
  auto e7 = euler_pochhammer(7);
  const long expected[] = {1, -1, -1, 0, 0, 1, 0, 1};
  for (std::size_t n = 0; n <= 7; ++n) CHECK(e7[n] == expected[n]);

  CHECK(euler_pochhammer(0) == TruncatedSeries::one(0));
  CHECK(euler_pochhammer(12)[12] == -1);

  // (q;q)_inf * 1/(q;q)_inf == 1 up to order 50
  auto e = euler_pochhammer(50);
  CHECK(mul(e, invert(e)) == TruncatedSeries::one(50));
}

TEST_CASE("pentagonal expansion equals the finite product up to T = 200") {
  for (std::size_t T : {1u, 2u, 13u, 50u, 200u})
    CHECK(euler_pochhammer(T) == finite_euler_product(T));
}

TEST_CASE("overpartition counts") {
  auto pbar = overpartition_gf(10);
  CHECK(pbar[0] == 1);
  CHECK(pbar[4] == 14);
  const long expected[] = {1, 2, 4, 8, 14, 24, 40};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(pbar[n] == expected[n]);
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(pbar[n] == static_cast<long>(comb::enumerate_overpartitions(n).size()));
}

TEST_CASE("partial theta series") {
  auto t11 = partial_theta(PartialThetaSpec(1, 1), 10);
  TruncatedSeries e11(10);
  e11[1] = -1; e11[3] = 1; e11[6] = -1; e11[10] = 1;
  CHECK(t11 == e11);

  auto t22 = partial_theta(PartialThetaSpec(2, 2), 12);
  TruncatedSeries e22(12);
  e22[2] = -1; e22[6] = 1; e22[12] = -1;
  CHECK(t22 == e22);

  auto t13 = partial_theta(PartialThetaSpec(1, 3), 9);
  TruncatedSeries e13(9);
  e13[2] = -1; e13[5] = 1; e13[9] = -1;
  CHECK(t13 == e13);

  CHECK_THROWS_AS(PartialThetaSpec(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(PartialThetaSpec(1, -1), std::invalid_argument);
  CHECK_THROWS_AS(PartialThetaSpec(1, 2), std::invalid_argument);  // odd a+b
}

TEST_CASE("string kernel h and its two printed forms") {
  auto h = string_kernel(1, 9);
  const long expected[] = {0, 1, 1, 0, 1, 0, 2, 0, 1, 1};
  for (std::size_t n = 0; n <= 9; ++n) CHECK(h[n] == expected[n]);

  CHECK(string_kernel(2, 8) == string_kernel(1, 4).dilated(2, 8));
  CHECK(string_kernel(1, 5)[0] == 0);

  // form agreement out to order 5000
  CHECK(string_kernel(1, 5000) == string_kernel_lambert(1, 5000));
  CHECK(string_kernel(3, 2000) == string_kernel_lambert(3, 2000));
}

TEST_CASE("string difference generating function") {
  auto f1 = string_diff_gf(1, 20);
  // independent recomputation: convolve the theta bracket (by direct
  // substitution) with enumerated overpartition counts
  std::vector<long> pbar_counts;
  for (unsigned n = 0; n <= 6; ++n)
    pbar_counts.push_back(
        static_cast<long>(comb::enumerate_overpartitions(n).size()));
  std::vector<long> bracket(7, 0);
  for (long n = 1; n * n + n <= 6; ++n) bracket[n * n + n] += 2 * ((n % 2) ? -1 : 1);
  for (long n = 1; (n * n + 3 * n) / 2 <= 6; ++n)
    bracket[(n * n + 3 * n) / 2] -= ((n % 2) ? -1 : 1);
  for (long n = 1; (n * n + n) / 2 <= 6; ++n)
    bracket[(n * n + n) / 2] -= ((n % 2) ? -1 : 1);
  for (std::size_t n = 0; n <= 6; ++n) {
    long conv = 0;
    for (std::size_t i = 0; i <= n; ++i) conv += bracket[i] * pbar_counts[n - i];
    CHECK(f1[n] == conv);
  }
  const long expected[] = {0, 1, 1, 1, 2, 1, 3};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(f1[n] == expected[n]);

  auto f2 = string_diff_gf(2, 10);
  CHECK(f2[3] == 1);
  CHECK(f2[4] == 1);
  CHECK(f1[0] == 0);
}

TEST_CASE("support: coefficient n of the k-th difference vanishes below 2k-1") {
  auto pbar = overpartition_gf(60);
  for (long k : {1L, 2L, 3L, 7L, 15L}) {
    auto fk = string_diff_gf(k, pbar);
    for (long n = 0; n < 2 * k - 1 && n <= 60; ++n) CHECK(fk[n] == 0);
    if (2 * k - 1 <= 60) CHECK(fk[2 * k - 1] == 1);
  }
}

TEST_CASE("m-string excess series") {
  auto h2 = m_string_excess_gf(2, 10);
  CHECK(h2[0] == 0);
  CHECK(h2[1] == 1);
  CHECK(h2[2] == 0);
  CHECK(m_string_excess_gf(5, 10)[0] == 0);
}

TEST_CASE("ospt-bar series and the string-difference identity") {
  auto ospt = ospt_bar_series(200);
  const long expected[] = {0, 1, 1, 2, 3};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(ospt[n] == expected[n]);

  auto pbar = overpartition_gf(200);
  // independent route for small n: direct convolution with the kernel diff
  auto hdiff = sub(string_kernel(1, 200), scaled(string_kernel(2, 200), 2));
  auto direct = mul(pbar, hdiff);
  CHECK(direct == ospt);

  // sum over k of the string differences reproduces ospt-bar for n <= 200
  std::vector<BigInt> sums(201, 0);
  for (long k = 1; 2 * k - 1 <= 200; ++k) {
    auto fk = string_diff_gf(k, pbar);
    for (std::size_t n = 2 * k - 1; n <= 200; ++n) sums[n] += fk[n];
  }
  for (std::size_t n = 0; n <= 200; ++n) CHECK(sums[n] == ospt[n]);

  CHECK(ospt[4] == string_diff_gf(1, pbar)[4] + string_diff_gf(2, pbar)[4]);
}

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<long> dist(-9, 9);
  TruncatedSeries a(300), b(300);
  for (std::size_t n = 0; n <= 300; ++n) {
    a[n] = dist(rng);
    b[n] = dist(rng);
  }
  b[0] = 1;

  const int max_threads = omp_get_max_threads();
  for (int threads : {1, 2, 4, 8}) {
    omp_set_num_threads(threads);
    CHECK(mul(a, b) == mul_serial(a, b));
    CHECK(mul_sparse(a, pentagonal_terms(300)) ==
          mul_sparse_serial(a, pentagonal_terms(300)));
    CHECK(mul_string_kernel(a, 1) == mul_string_kernel_serial(a, 1));
    CHECK(mul_string_kernel(a, 3) == mul_string_kernel_serial(a, 3));
  }
  omp_set_num_threads(max_threads);

  // the lambert kernel against the dense product
  auto dense = mul(a, string_kernel(2, 300));
  CHECK(mul_string_kernel(a, 2) == dense);
}

TEST_CASE("invert is a two-sided inverse for random unit series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 8; ++trial) {
    TruncatedSeries s(40);
    for (std::size_t n = 1; n <= 40; ++n) s[n] = dist(rng);
    s[0] = (trial % 2 == 0) ? 1 : -1;
    auto t = invert(s);
    CHECK(mul(s, t) == TruncatedSeries::one(40));
    CHECK(mul(t, s) == TruncatedSeries::one(40));
  }
}

TEST_CASE("dilated substitution") {
  auto h1 = string_kernel(1, 4);
  auto d = h1.dilated(2, 8);
  CHECK(d[2] == 1);
  CHECK(d[4] == 1);
  CHECK(d[8] == 1);
  CHECK(d[3] == 0);
}
