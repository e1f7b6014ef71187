// Copyright 2026 The seccrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times the serial reference kernels against the OpenMP versions on dense
// probability tables and reports the agreement between the two paths.
//
//   kernel_bench [--key-length L] [--repeats N] [--quick]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seccrit/kernels.hpp"

namespace {

namespace kn = seccrit::kernels;

std::vector<double> random_table(int key_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = std::size_t{1} << key_length;
  std::vector<double> probs(n);
  double total = 0.0;
  for (double& p : probs) {
    p = static_cast<double>(rng() >> 11) * 0x1.0p-53 + 1e-6;
    total += p;
  }
  for (double& p : probs) p /= total;
  return probs;
}

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(int repeats, F&& fn) {
  fn();  // warm up
  const auto start = Clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  const auto stop = Clock::now();
  const double total =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
          stop - start)
          .count();
  return total / repeats;
}

void report(const char* name, double serial_ms, double parallel_ms,
            double abs_diff) {
  std::printf("%-22s %10.3f ms %10.3f ms %8.2fx   |diff| %.3g\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, abs_diff);
}

}  // namespace

int main(int argc, char** argv) {
  int key_length = 22;
  int repeats = 5;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--key-length") == 0 && i + 1 < argc) {
      key_length = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--repeats") == 0 && i + 1 < argc) {
      repeats = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--quick") == 0) {
      key_length = 16;
      repeats = 2;
    } else {
      std::fprintf(stderr,
                   "usage: kernel_bench [--key-length L] [--repeats N] "
                   "[--quick]\n");
      return 1;
    }
  }
  if (key_length < 4 || key_length > 24) {
    std::fprintf(stderr, "key length must lie in [4, 24]\n");
    return 1;
  }

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("table size: 2^%d entries, %d repeats\n\n", key_length, repeats);
  std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "openmp",
              "speedup");

  const std::vector<double> p = random_table(key_length, 7);
  const std::vector<double> q = random_table(key_length, 8);

  {
    double a = 0.0, b = 0.0;
    const double serial_ms = time_ms(repeats, [&] { a = kn::serial::sum(p); });
    const double parallel_ms =
        time_ms(repeats, [&] { b = kn::parallel::sum(p); });
    report("sum", serial_ms, parallel_ms, std::abs(a - b));
  }
  {
    double a = 0.0, b = 0.0;
    const double serial_ms =
        time_ms(repeats, [&] { a = kn::serial::half_l1_distance(p, q); });
    const double parallel_ms =
        time_ms(repeats, [&] { b = kn::parallel::half_l1_distance(p, q); });
    report("half_l1_distance", serial_ms, parallel_ms, std::abs(a - b));
  }
  {
    double a = 0.0, b = 0.0;
    const double serial_ms =
        time_ms(repeats, [&] { a = kn::serial::max_value(p); });
    const double parallel_ms =
        time_ms(repeats, [&] { b = kn::parallel::max_value(p); });
    report("max_value", serial_ms, parallel_ms, std::abs(a - b));
  }

  // One narrow and one wide marginal; they exercise the two parallel
  // decompositions.
  for (int m : {2, std::min(12, key_length - 1)}) {
    std::vector<int> positions(m);
    for (int i = 0; i < m; ++i) positions[i] = 2 * i;  // spread over the key
    if (positions.back() >= key_length) {
      for (int i = 0; i < m; ++i) positions[i] = i;
    }
    std::vector<double> a, b;
    const double serial_ms = time_ms(
        repeats, [&] { a = kn::serial::marginal(p, key_length, positions); });
    const double parallel_ms = time_ms(repeats, [&] {
      b = kn::parallel::marginal(p, key_length, positions);
    });
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    char name[32];
    std::snprintf(name, sizeof(name), "marginal (m=%d)", m);
    report(name, serial_ms, parallel_ms, diff);
  }

  {
    std::vector<double> a, b;
    const double serial_ms = time_ms(
        repeats, [&] { a = kn::serial::bit_zero_masses(p, key_length); });
    const double parallel_ms = time_ms(
        repeats, [&] { b = kn::parallel::bit_zero_masses(p, key_length); });
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff = std::max(diff, std::abs(a[i] - b[i]));
    }
    report("bit_zero_masses", serial_ms, parallel_ms, diff);
  }

  return 0;
}
