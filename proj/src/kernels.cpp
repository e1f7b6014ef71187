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

#include "seccrit/kernels.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace seccrit::kernels {

namespace {

// Neumaier-compensated accumulator.
struct Accumulator {
  double s = 0.0;
  double c = 0.0;

  void add(double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }

  double value() const { return s + c; }
};

std::size_t block_count(std::size_t n) {
  return (n + kBlockSize - 1) / kBlockSize;
}

}  // namespace

std::uint32_t extract_subset_value(std::uint64_t key, int key_length,
                                   std::span<const int> positions) {
  std::uint32_t value = 0;
  for (int p : positions) {
    value = (value << 1) | static_cast<std::uint32_t>(key_bit(key, key_length, p));
  }
  return value;
}

std::uint64_t scatter_subset_value(std::uint32_t value, int key_length,
                                   std::span<const int> positions) {
  std::uint64_t key = 0;
  const int m = static_cast<int>(positions.size());
  for (int j = 0; j < m; ++j) {
    const std::uint64_t bit = (value >> (m - 1 - j)) & 1u;
    key |= bit << (key_length - 1 - positions[j]);
  }
  return key;
}

std::uint64_t complement_mask(int key_length, std::span<const int> positions) {
  std::uint64_t mask = (std::uint64_t{1} << key_length) - 1;
  for (int p : positions) {
    mask &= ~(std::uint64_t{1} << (key_length - 1 - p));
  }
  return mask;
}

namespace serial {

double sum(std::span<const double> x) {
  Accumulator acc;
  for (double v : x) acc.add(v);
  return acc.value();
}

double half_l1_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  Accumulator acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(std::abs(a[i] - b[i]));
  return 0.5 * acc.value();
}

double max_value(std::span<const double> x) {
  double best = -std::numeric_limits<double>::infinity();
  for (double v : x) best = std::max(best, v);
  return best;
}

double max_abs_deviation(std::span<const double> x, double center) {
  double best = 0.0;
  for (double v : x) best = std::max(best, std::abs(v - center));
  return best;
}

std::vector<double> marginal(std::span<const double> probs, int key_length,
                             std::span<const int> positions) {
  std::vector<double> out(std::size_t{1} << positions.size(), 0.0);
  const std::uint64_t n = std::uint64_t{1} << key_length;
  for (std::uint64_t k = 0; k < n; ++k) {
    out[extract_subset_value(k, key_length, positions)] += probs[k];
  }
  return out;
}

std::vector<double> bit_zero_masses(std::span<const double> probs,
                                    int key_length) {
  std::vector<double> masses(key_length, 0.0);
  const std::uint64_t n = std::uint64_t{1} << key_length;
  for (std::uint64_t k = 0; k < n; ++k) {
    for (int i = 0; i < key_length; ++i) {
      if (key_bit(k, key_length, i) == 0) masses[i] += probs[k];
    }
  }
  return masses;
}

}  // namespace serial

namespace parallel {

double sum(std::span<const double> x) {
  const std::size_t nb = block_count(x.size());
  std::vector<double> partials(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, x.size());
    Accumulator acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(x[i]);
    partials[b] = acc.value();
  }
  Accumulator total;
  for (double p : partials) total.add(p);
  return total.value();
}

double half_l1_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const std::size_t nb = block_count(a.size());
  std::vector<double> partials(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(nb); ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, a.size());
    Accumulator acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(std::abs(a[i] - b[i]));
    partials[blk] = acc.value();
  }
  Accumulator total;
  for (double p : partials) total.add(p);
  return 0.5 * total.value();
}

double max_value(std::span<const double> x) {
  double best = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(x.size()); ++i) {
    best = std::max(best, x[i]);
  }
  return best;
}

double max_abs_deviation(std::span<const double> x, double center) {
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(x.size()); ++i) {
    best = std::max(best, std::abs(x[i] - center));
  }
  return best;
}

std::vector<double> marginal(std::span<const double> probs, int key_length,
                             std::span<const int> positions) {
  const int m = static_cast<int>(positions.size());
  const std::size_t outcomes = std::size_t{1} << m;
  std::vector<double> out(outcomes, 0.0);

  if (outcomes >= 32) {
    // Wide marginal: each outcome owns one fiber, summed independently.
    const std::uint64_t mask = complement_mask(key_length, positions);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(outcomes); ++v) {
      const std::uint64_t base = scatter_subset_value(
          static_cast<std::uint32_t>(v), key_length, positions);
      Accumulator acc;
      std::uint64_t x = 0;
      while (true) {
        acc.add(probs[base | x]);
        x = (x - mask) & mask;
        if (x == 0) break;
      }
      out[v] = acc.value();
    }
    return out;
  }

  // Narrow marginal: block-local accumulators, combined in block order.
  const std::size_t n = probs.size();
  const std::size_t nb = block_count(n);
  std::vector<double> partials(nb * outcomes, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(lo + kBlockSize, n);
    double* local = partials.data() + static_cast<std::size_t>(b) * outcomes;
    for (std::size_t k = lo; k < hi; ++k) {
      local[extract_subset_value(k, key_length, positions)] += probs[k];
    }
  }
  for (std::size_t v = 0; v < outcomes; ++v) {
    Accumulator acc;
    for (std::size_t b = 0; b < nb; ++b) acc.add(partials[b * outcomes + v]);
    out[v] = acc.value();
  }
  return out;
}

std::vector<double> bit_zero_masses(std::span<const double> probs,
                                    int key_length) {
  std::vector<double> masses(key_length, 0.0);
  const std::uint64_t n = std::uint64_t{1} << key_length;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < key_length; ++i) {
    Accumulator acc;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (key_bit(k, key_length, i) == 0) acc.add(probs[k]);
    }
    masses[i] = acc.value();
  }
  return masses;
}

}  // namespace parallel

double sum(std::span<const double> x) {
  return x.size() >= kParallelThreshold ? parallel::sum(x) : serial::sum(x);
}

double half_l1_distance(std::span<const double> a, std::span<const double> b) {
  return a.size() >= kParallelThreshold ? parallel::half_l1_distance(a, b)
                                        : serial::half_l1_distance(a, b);
}

double max_value(std::span<const double> x) {
  return x.size() >= kParallelThreshold ? parallel::max_value(x)
                                        : serial::max_value(x);
}

double max_abs_deviation(std::span<const double> x, double center) {
  return x.size() >= kParallelThreshold
             ? parallel::max_abs_deviation(x, center)
             : serial::max_abs_deviation(x, center);
}

std::vector<double> marginal(std::span<const double> probs, int key_length,
                             std::span<const int> positions) {
  return probs.size() >= kParallelThreshold
             ? parallel::marginal(probs, key_length, positions)
             : serial::marginal(probs, key_length, positions);
}

std::vector<double> bit_zero_masses(std::span<const double> probs,
                                    int key_length) {
  if (probs.size() >= kParallelThreshold) {
    return parallel::bit_zero_masses(probs, key_length);
  }
  // Compensated even on the small path; the per-bit masses feed the
  // adversary BER directly.
  std::vector<double> masses(key_length, 0.0);
  for (int i = 0; i < key_length; ++i) {
    Accumulator acc;
    const std::uint64_t n = std::uint64_t{1} << key_length;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (key_bit(k, key_length, i) == 0) acc.add(probs[k]);
    }
    masses[i] = acc.value();
  }
  return masses;
}

}  // namespace seccrit::kernels
