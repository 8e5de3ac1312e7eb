// Benchmark of the OpenMP series kernels against their serial references.
// The parallel paths are bit-identical to the serial ones by construction;
// this target measures the wall-clock difference.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <random>

#include "ostrings/series.hpp"

using namespace ostrings;
using namespace ostrings::qseries;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds(clock_type::time_point a, clock_type::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"series kernel benchmark: serial reference vs OpenMP"};
  std::size_t dense_T = 1500;
  std::size_t sparse_T = 30000;
  int reps = 3;
  int threads = 0;
  app.add_option("--dense-trunc", dense_T, "order for the dense product");
  app.add_option("--sparse-trunc", sparse_T, "order for the sparse kernels");
  app.add_option("--reps", reps, "repetitions (best-of)");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  std::printf("threads: %d\n", omp_get_max_threads());

  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  TruncatedSeries a(dense_T), b(dense_T);
  for (std::size_t n = 0; n <= dense_T; ++n) {
    a[n] = dist(rng);
    b[n] = dist(rng);
  }

  report("dense cauchy product",
         time_best_of(reps, [&] { volatile auto r = mul_serial(a, b); }),
         time_best_of(reps, [&] { volatile auto r = mul(a, b); }));

  const auto pbar = overpartition_gf(sparse_T);
  const auto bracket = string_diff_theta_terms(1, sparse_T);
  report("sparse theta convolution",
         time_best_of(reps,
                      [&] { volatile auto r = mul_sparse_serial(pbar, bracket); }),
         time_best_of(reps, [&] { volatile auto r = mul_sparse(pbar, bracket); }));

  report("strided lambert kernel",
         time_best_of(reps,
                      [&] { volatile auto r = mul_string_kernel_serial(pbar, 1); }),
         time_best_of(reps, [&] { volatile auto r = mul_string_kernel(pbar, 1); }));

  return 0;
}
