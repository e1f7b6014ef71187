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

#include "seccrit/extremal.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "seccrit/kernels.hpp"

namespace seccrit {

ExtremalRecipe::ExtremalRecipe(int l, double eps, KeySubset t,
                               std::uint32_t favored)
    : key_length(l), budget(eps), target(std::move(t)), favored_value(favored) {
  if (key_length < 1 || key_length > kMaxDenseKeyLength) {
    throw std::invalid_argument("key_length out of range [1, 24]: " +
                                std::to_string(key_length));
  }
  if (target.max_position() >= key_length) {
    throw std::invalid_argument("target subset exceeds key_length");
  }
  if (favored_value >= target.outcome_count()) {
    throw std::invalid_argument("favored value needs more bits than target");
  }
  if (!(budget >= 0.0) || budget > 1.0) {
    throw std::invalid_argument("budget must lie in [0, 1]");
  }
  const double cap = 1.0 - std::exp2(-target.size());
  if (budget > cap) {
    throw std::invalid_argument("infeasible budget: " + std::to_string(budget) +
                                " exceeds 1 - 2^-m = " + std::to_string(cap));
  }
}

KeyDistribution construct_equality_distribution(const ExtremalRecipe& recipe) {
  const int l = recipe.key_length;
  const int m = recipe.target.size();
  const std::size_t n = std::size_t{1} << l;
  const std::size_t fiber = std::size_t{1} << (l - m);
  const double base = std::exp2(-l);
  if (recipe.budget == 0.0) return KeyDistribution::uniform(l);

  const double add = recipe.budget / static_cast<double>(fiber);
  const double sub = recipe.budget / static_cast<double>(n - fiber);
  std::vector<double> probs(n);
  const auto positions = recipe.target.positions();
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelThreshold)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    const bool favored =
        kernels::extract_subset_value(static_cast<std::uint64_t>(k), l,
                                      positions) == recipe.favored_value;
    probs[k] = favored ? base + add : base - sub;
  }
  return KeyDistribution(l, std::move(probs));
}

double max_guess_given_budget(int key_length, const KeySubset& subset,
                              double budget) {
  if (key_length < 1 || key_length > kOracleMaxKeyLength) {
    throw std::invalid_argument("oracle scale exceeded: key_length must be <= " +
                                std::to_string(kOracleMaxKeyLength));
  }
  if (subset.max_position() >= key_length) {
    throw std::invalid_argument("subset exceeds key_length");
  }
  if (!(budget >= 0.0)) {
    throw std::invalid_argument("budget must be >= 0");
  }

  const std::size_t n = std::size_t{1} << key_length;
  const double base = std::exp2(-key_length);
  const auto positions = subset.positions();
  const std::uint64_t outcomes = subset.outcome_count();

  double best = 0.0;
  for (std::uint64_t v = 0; v < outcomes; ++v) {
    // Greedy transfer: pour mass onto one key of the favored fiber, draining
    // the keys outside the fiber in index order. Each transferred unit costs
    // one unit of variational distance.
    std::vector<double> probs(n, base);
    const std::uint64_t receiver = kernels::scatter_subset_value(
        static_cast<std::uint32_t>(v), key_length, positions);
    double remaining = budget;
    double removed = 0.0;
    for (std::uint64_t k = 0; k < n && remaining > 0.0; ++k) {
      if (kernels::extract_subset_value(k, key_length, positions) == v) continue;
      const double take = std::min(probs[k], remaining);
      probs[k] -= take;
      removed += take;
      remaining -= take;
    }
    // Deposit in one rounding step so the table still sums to 1 tightly.
    probs[receiver] += removed;
    const KeyDistribution candidate(key_length, std::move(probs));
    best = std::max(best, optimal_guess_prob(candidate, subset));
  }
  return best;
}

KeyDistribution construct_biased_bits_distribution(int key_length,
                                                   double per_bit_bias) {
  if (key_length < 1 || key_length > kMaxDenseKeyLength) {
    throw std::invalid_argument("key_length out of range [1, 24]");
  }
  if (!(per_bit_bias >= 0.0) || per_bit_bias > 0.5) {
    throw std::invalid_argument("per-bit bias must lie in [0, 1/2]");
  }
  const double p0 = 0.5 + per_bit_bias;
  const double p1 = 0.5 - per_bit_bias;

  // pow0[i] = p0^i computed by repeated multiplication; keeps the table a
  // pure product so the closed form (1/2+bias)^l matches the dense maximum.
  std::vector<double> pow0(key_length + 1, 1.0), pow1(key_length + 1, 1.0);
  for (int i = 1; i <= key_length; ++i) {
    pow0[i] = pow0[i - 1] * p0;
    pow1[i] = pow1[i - 1] * p1;
  }

  const std::size_t n = std::size_t{1} << key_length;
  std::vector<double> probs(n);
#pragma omp parallel for schedule(static) if (n >= kernels::kParallelThreshold)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    const int ones = std::popcount(static_cast<std::uint64_t>(k));
    probs[k] = pow0[key_length - ones] * pow1[ones];
  }
  return KeyDistribution(key_length, std::move(probs));
}

}  // namespace seccrit
