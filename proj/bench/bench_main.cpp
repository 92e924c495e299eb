// Serial reference scans vs the OpenMP scans, and schoolbook vs Karatsuba.
// Prints CSV: kernel,variant,threads,median_seconds,speedup

#include "gf2nbasis/gf2x.hpp"
#include "gf2nbasis/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gf2nbasis;

namespace {

double median_seconds(int reps, const std::function<void()>& f) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto a = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - a).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void report(const char* kernel, const char* variant, int threads, double s, double base) {
  std::printf("%s,%s,%d,%.6f,%.2f\n", kernel, variant, threads, s, base / s);
}

template <typename Serial, typename Parallel>
void compare_scan(const char* kernel, int reps, const std::vector<int>& thread_counts,
                  Serial serial, Parallel parallel) {
  const auto reference = serial();
  const double base = median_seconds(reps, [&] { (void)serial(); });
  report(kernel, "serial", 1, base, base);
  for (int t : thread_counts) {
    if (parallel(t) != reference) {
      std::fprintf(stderr, "%s: parallel result differs at %d threads\n", kernel, t);
      std::exit(1);
    }
    report(kernel, "openmp", t, median_seconds(reps, [&] { (void)parallel(t); }), base);
  }
}

} // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 5;
  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  // Always include 2 and 4 so the parallel path runs even on one core.
  std::vector<int> threads;
  for (int t = 1; t < std::max(max_threads, 4); t *= 2) threads.push_back(t);
  threads.push_back(std::max(max_threads, 4));

  std::printf("kernel,variant,threads,median_seconds,speedup\n");
  compare_scan("gnb_range_250_2000", reps, threads,
               [] { return tables::serial::gnb_range(250, 2000, 10); },
               [](int t) { return tables::gnb_range(250, 2000, 10, t); });
  compare_scan("enb_range_500_4000", reps, threads,
               [] { return tables::serial::enb_range(500, 4000, 20); },
               [](int t) { return tables::enb_range(500, 4000, 20, t); });
  compare_scan("ext_range_1000_2400", reps, threads,
               [] { return tables::serial::ext_range(1000, 2400, 10, 20); },
               [](int t) { return tables::ext_range(1000, 2400, 10, 20, t); });

  std::mt19937_64 gen(1);
  auto random_poly = [&](std::size_t bits) {
    std::vector<gf2x::Word> w((bits + 63) / 64);
    for (auto& x : w) x = gen();
    return gf2x::BinaryPolynomial::from_words(std::move(w));
  };
  for (std::size_t bits : {512u, 2048u, 8192u, 32768u}) {
    const auto a = random_poly(bits), b = random_poly(bits);
    const std::string name = "polymul_" + std::to_string(bits);
    const double school = median_seconds(reps, [&] { (void)gf2x::mul_schoolbook(a, b); });
    report(name.c_str(), "schoolbook", 1, school, school);
    report(name.c_str(), "karatsuba", 1, median_seconds(reps, [&] { (void)gf2x::mul_karatsuba(a, b); }),
           school);
  }
  return 0;
}
