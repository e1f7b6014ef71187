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

#ifndef SECCRIT_EXTREMAL_HPP
#define SECCRIT_EXTREMAL_HPP

#include "seccrit/dist.hpp"

// Adversary distributions that meet the guessing-probability bounds with
// equality, plus an independent greedy optimizer used as the oracle for
// how large a guess probability a variational-distance budget can buy.

namespace seccrit {

// Parameters of a bound-saturating construction: spend the whole distance
// budget raising the marginal probability of one favored outcome of the
// target subset.
struct ExtremalRecipe {
  int key_length = 0;
  double budget = 0.0;  // variational distance to uniform, spent exactly
  KeySubset target;
  std::uint32_t favored_value = 0;

  ExtremalRecipe(int l, double eps, KeySubset t, std::uint32_t favored);
};

// Adds budget/|fiber| to every key consistent with the favored outcome and
// removes budget/|rest| from every other key. The positive and negative
// deviation sets are disjoint, so the variational distance to uniform is
// exactly the budget, and the favored marginal entry is exactly
// 2^-m + budget. Infeasible when budget > 1 - 2^-m.
KeyDistribution construct_equality_distribution(const ExtremalRecipe& recipe);

// Supremum of optimal_guess_prob(P, subset) over all P within variational
// distance `budget` of uniform, found by explicit greedy mass transfer on
// the dense table for every candidate favored outcome. Oracle scale only:
// key_length <= 12. Expected value: min(1, 2^-|subset| + budget).
double max_guess_given_budget(int key_length, const KeySubset& subset,
                              double budget);

inline constexpr int kOracleMaxKeyLength = 12;

// Product distribution with every bit independently 0 with probability
// 1/2 + bias. Exhibits adversary BER 1/2 - bias while the whole-key guess
// probability (1/2 + bias)^l stays near 2^-l for small bias: many key bits
// can lean the adversary's way although the sequence stays hard to name.
KeyDistribution construct_biased_bits_distribution(int key_length,
                                                   double per_bit_bias);

}  // namespace seccrit

#endif  // SECCRIT_EXTREMAL_HPP
