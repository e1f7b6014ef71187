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

#ifndef SECCRIT_DIST_HPP
#define SECCRIT_DIST_HPP

#include <cstdint>
#include <span>
#include <vector>

// Adversary posteriors over l-bit keys, held as dense tables of all 2^l
// probabilities, plus the primitive quantities the guarantee bounds refer
// to: variational distance, marginals, conditionals, optimal guessing
// probabilities and the adversary's per-bit error rate.
//
// Values are immutable after construction and every operation is a pure
// function, so concurrent reads are safe. Large tables are processed by
// the deterministic OpenMP kernels in kernels.hpp.

namespace seccrit {

// Dense tables only; larger key lengths are served by the closed-form
// bounds, never by explicit distributions.
inline constexpr int kMaxDenseKeyLength = 24;

// Absolute tolerance on sum-to-one at construction. Inputs outside it are
// rejected, never renormalized.
inline constexpr double kNormalizationTolerance = 1e-12;

// An ordered set of bit positions within an l-bit key. Bit 0 is the most
// significant bit of the integer key index.
class KeySubset {
 public:
  // Positions must be non-empty, strictly increasing and nonnegative.
  // The upper range check happens against a concrete distribution.
  explicit KeySubset(std::vector<int> positions);

  static KeySubset whole_key(int key_length);
  // The first `size` bit positions 0..size-1.
  static KeySubset prefix(int size);

  int size() const { return static_cast<int>(positions_.size()); }
  std::span<const int> positions() const { return positions_; }
  std::uint64_t outcome_count() const { return std::uint64_t{1} << size(); }
  int max_position() const { return positions_.back(); }
  bool disjoint_with(const KeySubset& other) const;

 private:
  std::vector<int> positions_;
};

// A concrete value for the bits at a subset's positions. The bit at
// positions[0] is the most significant bit of `value`.
struct SubsetOutcome {
  KeySubset subset;
  std::uint32_t value = 0;

  SubsetOutcome(KeySubset s, std::uint32_t v);
};

class KeyDistribution {
 public:
  // Validates length, entry nonnegativity and normalization; throws
  // std::invalid_argument on any violation.
  KeyDistribution(int key_length, std::vector<double> probs);

  static KeyDistribution uniform(int key_length);

  int key_length() const { return key_length_; }
  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  double prob(std::uint64_t key) const { return probs_[key]; }

 private:
  int key_length_;
  std::vector<double> probs_;
};

// Half the L1 distance between P and Q; symmetric, in [0, 1].
double variational_distance(const KeyDistribution& p, const KeyDistribution& q);

// Distribution of the subset outcome: entry v sums P over all keys whose
// bits at the subset positions encode v.
std::vector<double> marginal(const KeyDistribution& p, const KeySubset& subset);

// Bayes conditioning on an observed subset outcome. Conditioning on an
// outcome of zero probability is an error.
KeyDistribution condition(const KeyDistribution& p, const SubsetOutcome& obs);

// The adversary's optimal probability of naming the bits at `subset`,
// i.e. the maximum marginal entry. Always >= 2^-|subset|.
double optimal_guess_prob(const KeyDistribution& p, const KeySubset& subset);

// Optimal guess probability for `target` after observing `known`;
// the two subsets must be disjoint.
double conditional_guess_prob(const KeyDistribution& p,
                              const SubsetOutcome& known,
                              const KeySubset& target);

// Average per-bit error of the bitwise maximum-posterior estimator under a
// true key drawn from P itself: (1/l) * sum_i (1 - max_b P(K_i = b)).
// This is the estimator minimizing the expected number of bit errors.
double eve_bit_error_rate(const KeyDistribution& p);

// True iff every entry is within tol of 2^-l. Deviation anywhere means
// the distribution simply is not uniform; there is no probability to it.
bool is_uniform(const KeyDistribution& p, double tol);

}  // namespace seccrit

#endif  // SECCRIT_DIST_HPP
