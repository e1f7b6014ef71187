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

#ifndef SECCRIT_BOUNDS_HPP
#define SECCRIT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

// Closed-form guarantee engine for arbitrary (l, d), including key lengths
// far beyond the dense representation. Everything involving 2^-l runs in
// the log2 domain; direct floating point would underflow around l = 1074
// while the interesting regime sits at l = 10^6.

namespace seccrit {

struct SecurityParameters {
  std::int64_t key_length = 0;          // no dense-mode cap here
  double trace_distance = 0.0;          // d in [0, 1]
  std::optional<double> qber;           // in [0, 1/2] when present

  void validate() const;                // throws std::invalid_argument
};

// log2(2^a + 2^b), stable for very negative a, b.
double log2_add_exp2(double a, double b);

// log2(2^-m + epsilon).
double log2_guess_bound(std::int64_t subset_size, double epsilon);

// The guessing-probability bound 2^-m + epsilon for an m-bit subset.
// Exact below the underflow line; equal to epsilon beyond it, where the
// 2^-m term is smaller than one ulp of any representable epsilon > 0.
double raw_guess_bound(std::int64_t subset_size, double epsilon);

// Converts an on-average distance guarantee into an individual one via
// Markov tail bounds: one averaging level costs a square root, two levels
// (key values and privacy-amplification codes) cost a cube root.
double markov_individual_epsilon(double trace_distance, int averaging_levels);

// Guaranteed upper bound on 1/2 - p_b for the adversary's whole-key BER:
// d^(1/4) / (2 * sqrt(log2 e)). Read as d^(1/4) divided by the full
// product 2*sqrt(log2 e); the alternative grouping would differ by a
// factor of log2 e ~ 1.44 and is flagged in the report footnote.
double ber_gap_bound(double trace_distance);

// Length n of a perfectly uniform key with the same whole-key guessing
// guarantee: -log2(2^-l + epsilon). Stable up to l = 10^7 and beyond.
double effective_uniform_bits(std::int64_t key_length, double epsilon);

// lambda in d = 2^(-lambda * l); 1 is near-ideal, << 1 is weak security.
// Undefined for d = 0 or d >= 1 (throws std::domain_error).
double convergence_exponent(std::int64_t key_length, double trace_distance);

// Binary entropy h(q) = -q log2 q - (1-q) log2 (1-q), h(0) = 0.
double binary_entropy(double q);

// Bits leaked per key bit by open error correction, h(QBER).
double leak_ec(double qber);

// One row of a guessing-bound table: the bound for an m-bit subset plus
// its exact log2 (the linear value underflows long before the log does).
struct SubsetBound {
  std::int64_t subset_size = 0;
  double bound = 0.0;       // clamped to [0, 1]; above 1 the bound is vacuous
  double log2_bound = 0.0;  // log2 of the unclamped value
};

// The full guarantee bundle for one (l, d, QBER) scenario. The averaged
// columns use epsilon = d, which is what a distance guarantee yields only
// on average over key values and privacy-amplification codes; the
// individual columns use the Markov-converted d^(1/3). The two are always
// reported side by side.
struct GuaranteeReport {
  SecurityParameters params;
  std::vector<std::int64_t> subset_sizes;

  std::vector<SubsetBound> raw_subset_bound_avg;         // epsilon' = d
  std::vector<SubsetBound> kpa_bound_avg;                // epsilon'' = d
  std::vector<SubsetBound> raw_subset_bound_individual;  // epsilon' = d^(1/3)

  double individual_epsilon = 0.0;             // d^(1/3)
  double individual_epsilon_single_avg = 0.0;  // d^(1/2)
  double ber_gap_bound = 0.0;

  double effective_uniform_bits_avg = 0.0;
  double effective_uniform_bits_individual = 0.0;

  std::optional<double> lambda;   // absent when d = 0 or d >= 1
  std::optional<double> leak_ec;  // h(QBER) when QBER given

  // d is small on the scale that matters only when it is small relative
  // to 2^-l, not relative to 1. True iff d <= 2^-l / 10.
  bool near_ideal_scale = false;

  // The refuted failure-probability reading: "the key is ideal except
  // with probability d" would promise this probability of idealness.
  double wrong_interpretation_claim = 0.0;  // 1 - d
};

// Fills every report field from the operations above. Subset sizes must
// lie in [1, key_length]; they are sorted and deduplicated.
GuaranteeReport build_report(const SecurityParameters& params,
                             std::vector<std::int64_t> subset_sizes);

}  // namespace seccrit

#endif  // SECCRIT_BOUNDS_HPP
