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

#ifndef SECCRIT_KERNELS_HPP
#define SECCRIT_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

// Data-parallel kernels over dense probability tables (2^l entries).
//
// Every kernel exists in two forms: a plain serial reference under
// kernels::serial and an OpenMP version under kernels::parallel. The
// parallel versions use a fixed block decomposition so the result is
// bit-identical for any thread count; the unqualified wrappers pick the
// parallel path above a size threshold. Summations are compensated
// (Neumaier) so that validating "sums to 1 within 1e-12" stays meaningful
// at 2^24 entries.

namespace seccrit::kernels {

inline constexpr std::size_t kBlockSize = 8192;
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

// Bit convention: bit 0 is the most significant bit of the integer key
// index, i.e. bit i of key k under length l is (k >> (l-1-i)) & 1.
inline int key_bit(std::uint64_t key, int key_length, int position) {
  return static_cast<int>((key >> (key_length - 1 - position)) & 1u);
}

// Packs the bits of `key` at `positions` (strictly increasing) into an
// outcome value; positions[0] lands in the most significant bit.
std::uint32_t extract_subset_value(std::uint64_t key, int key_length,
                                   std::span<const int> positions);

// Spreads an outcome value back onto its bit positions; all other bits 0.
std::uint64_t scatter_subset_value(std::uint32_t value, int key_length,
                                   std::span<const int> positions);

// Mask with ones at every position NOT in `positions`.
std::uint64_t complement_mask(int key_length, std::span<const int> positions);

namespace serial {

double sum(std::span<const double> x);
double half_l1_distance(std::span<const double> a, std::span<const double> b);
double max_value(std::span<const double> x);
double max_abs_deviation(std::span<const double> x, double center);

// One pass over the table, accumulating into out[subset value of key].
std::vector<double> marginal(std::span<const double> probs, int key_length,
                             std::span<const int> positions);

// masses[i] = total probability of keys whose bit i is 0.
std::vector<double> bit_zero_masses(std::span<const double> probs,
                                    int key_length);

}  // namespace serial

namespace parallel {

double sum(std::span<const double> x);
double half_l1_distance(std::span<const double> a, std::span<const double> b);
double max_value(std::span<const double> x);
double max_abs_deviation(std::span<const double> x, double center);

// Per-outcome fiber sums when the marginal is wide, block-local
// accumulators when it is narrow; both orders are fixed, so the output
// does not depend on the thread count.
std::vector<double> marginal(std::span<const double> probs, int key_length,
                             std::span<const int> positions);

std::vector<double> bit_zero_masses(std::span<const double> probs,
                                    int key_length);

}  // namespace parallel

// Dispatching wrappers: parallel above kParallelThreshold, serial-shaped
// compensated loops below it. Deterministic either way.
double sum(std::span<const double> x);
double half_l1_distance(std::span<const double> a, std::span<const double> b);
double max_value(std::span<const double> x);
double max_abs_deviation(std::span<const double> x, double center);
std::vector<double> marginal(std::span<const double> probs, int key_length,
                             std::span<const int> positions);
std::vector<double> bit_zero_masses(std::span<const double> probs,
                                    int key_length);

}  // namespace seccrit::kernels

#endif  // SECCRIT_KERNELS_HPP
