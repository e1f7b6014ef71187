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

#include "seccrit/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "seccrit/kernels.hpp"

namespace seccrit {

namespace {

void check_key_length(int key_length) {
  if (key_length < 1 || key_length > kMaxDenseKeyLength) {
    throw std::invalid_argument(
        "key_length out of range [1, " + std::to_string(kMaxDenseKeyLength) +
        "]: " + std::to_string(key_length));
  }
}

void check_subset_range(const KeySubset& subset, int key_length) {
  if (subset.max_position() >= key_length) {
    throw std::invalid_argument(
        "subset position " + std::to_string(subset.max_position()) +
        " out of range for key_length " + std::to_string(key_length));
  }
}

}  // namespace

KeySubset::KeySubset(std::vector<int> positions)
    : positions_(std::move(positions)) {
  if (positions_.empty()) {
    throw std::invalid_argument("subset positions must be non-empty");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (positions_[i] < 0) {
      throw std::invalid_argument("subset positions must be nonnegative");
    }
    if (i > 0 && positions_[i] <= positions_[i - 1]) {
      throw std::invalid_argument(
          "subset positions must be strictly increasing");
    }
  }
}

KeySubset KeySubset::whole_key(int key_length) {
  check_key_length(key_length);
  return prefix(key_length);
}

KeySubset KeySubset::prefix(int size) {
  std::vector<int> positions(size);
  for (int i = 0; i < size; ++i) positions[i] = i;
  return KeySubset(std::move(positions));
}

bool KeySubset::disjoint_with(const KeySubset& other) const {
  for (int p : positions_) {
    if (std::binary_search(other.positions_.begin(), other.positions_.end(),
                           p)) {
      return false;
    }
  }
  return true;
}

SubsetOutcome::SubsetOutcome(KeySubset s, std::uint32_t v)
    : subset(std::move(s)), value(v) {
  if (value >= subset.outcome_count()) {
    throw std::invalid_argument("subset outcome value " +
                                std::to_string(value) +
                                " needs more bits than the subset has");
  }
}

KeyDistribution::KeyDistribution(int key_length, std::vector<double> probs)
    : key_length_(key_length), probs_(std::move(probs)) {
  check_key_length(key_length_);
  const std::size_t expected = std::size_t{1} << key_length_;
  if (probs_.size() != expected) {
    throw std::invalid_argument(
        "probs has " + std::to_string(probs_.size()) + " entries, expected " +
        std::to_string(expected));
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0)) {
      throw std::invalid_argument("probs[" + std::to_string(i) +
                                  "] is negative or NaN");
    }
  }
  const double total = kernels::sum(probs_);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("probs sum to " + std::to_string(total) +
                                ", not 1 within 1e-12");
  }
}

KeyDistribution KeyDistribution::uniform(int key_length) {
  check_key_length(key_length);
  const std::size_t n = std::size_t{1} << key_length;
  return KeyDistribution(key_length,
                         std::vector<double>(n, std::exp2(-key_length)));
}

double variational_distance(const KeyDistribution& p,
                            const KeyDistribution& q) {
  if (p.key_length() != q.key_length()) {
    throw std::invalid_argument("variational distance needs equal key lengths");
  }
  return kernels::half_l1_distance(p.probs(), q.probs());
}

std::vector<double> marginal(const KeyDistribution& p,
                             const KeySubset& subset) {
  check_subset_range(subset, p.key_length());
  return kernels::marginal(p.probs(), p.key_length(), subset.positions());
}

KeyDistribution condition(const KeyDistribution& p, const SubsetOutcome& obs) {
  check_subset_range(obs.subset, p.key_length());
  const double mass = marginal(p, obs.subset)[obs.value];
  if (mass <= 0.0) {
    throw std::domain_error("conditioning on a zero-probability outcome");
  }
  const double inv = 1.0 / mass;
  const std::int64_t n = static_cast<std::int64_t>(p.size());
  std::vector<double> out(p.size(), 0.0);
  const auto positions = obs.subset.positions();
  const int l = p.key_length();
#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kernels::kParallelThreshold))
  for (std::int64_t k = 0; k < n; ++k) {
    if (kernels::extract_subset_value(static_cast<std::uint64_t>(k), l,
                                      positions) == obs.value) {
      out[k] = p.prob(k) * inv;
    }
  }
  // Division may leave the total a few ulp off; rescale by the measured
  // sum so the constructor's 1e-12 gate cannot trip on rounding alone.
  const double total = kernels::sum(out);
  if (total != 1.0 && total > 0.0) {
    const double fix = 1.0 / total;
#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kernels::kParallelThreshold))
    for (std::int64_t k = 0; k < n; ++k) out[k] *= fix;
  }
  return KeyDistribution(p.key_length(), std::move(out));
}

double optimal_guess_prob(const KeyDistribution& p, const KeySubset& subset) {
  return kernels::max_value(marginal(p, subset));
}

double conditional_guess_prob(const KeyDistribution& p,
                              const SubsetOutcome& known,
                              const KeySubset& target) {
  if (!known.subset.disjoint_with(target)) {
    throw std::invalid_argument(
        "known and target subsets must be disjoint");
  }
  return optimal_guess_prob(condition(p, known), target);
}

double eve_bit_error_rate(const KeyDistribution& p) {
  const std::vector<double> zero_masses =
      kernels::bit_zero_masses(p.probs(), p.key_length());
  double total_error = 0.0;
  for (double m0 : zero_masses) {
    total_error += 1.0 - std::max(m0, 1.0 - m0);
  }
  const double ber = total_error / p.key_length();
  return std::clamp(ber, 0.0, 0.5);
}

bool is_uniform(const KeyDistribution& p, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be >= 0");
  const double u = std::exp2(-p.key_length());
  return kernels::max_abs_deviation(p.probs(), u) <= tol;
}

}  // namespace seccrit
