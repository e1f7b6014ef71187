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

#include "seccrit/ensemble.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace seccrit {

namespace {

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

DistanceEnsemble::DistanceEnsemble(std::vector<EnsembleEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("ensemble must have at least one entry");
  }
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const EnsembleEntry& e = entries_[i];
    if (!(e.weight > 0.0)) {
      throw std::invalid_argument("entry " + std::to_string(i) +
                                  ": weight must be > 0");
    }
    if (!(e.distance >= 0.0 && e.distance <= 1.0)) {
      throw std::invalid_argument("entry " + std::to_string(i) +
                                  ": distance must lie in [0, 1]");
    }
    weight_sum += e.weight;
    if (e.distribution) {
      const double actual = variational_distance(
          *e.distribution, KeyDistribution::uniform(e.distribution->key_length()));
      if (std::abs(actual - e.distance) > 1e-9) {
        throw std::invalid_argument(
            "entry " + std::to_string(i) +
            ": attached distribution has distance " + std::to_string(actual) +
            ", expected " + std::to_string(e.distance));
      }
    }
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw std::invalid_argument("ensemble weights sum to " +
                                std::to_string(weight_sum) + ", not 1");
  }
}

DistanceEnsemble DistanceEnsemble::two_point_tight(double average,
                                                   double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in (0, 1]");
  }
  if (!(average > 0.0 && average <= threshold)) {
    throw std::invalid_argument("average must lie in (0, threshold]");
  }
  const double p = average / threshold;
  std::vector<EnsembleEntry> entries;
  if (p < 1.0) entries.push_back({1.0 - p, 0.0, {}});
  entries.push_back({p, threshold, {}});
  return DistanceEnsemble(std::move(entries));
}

DistanceEnsemble DistanceEnsemble::sample(std::size_t entry_count,
                                          std::uint64_t seed,
                                          std::optional<double> target_mean) {
  if (entry_count == 0) {
    throw std::invalid_argument("entry_count must be >= 1");
  }
  if (target_mean && !(*target_mean > 0.0 && *target_mean <= 1.0)) {
    throw std::invalid_argument("target_mean must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);

  std::vector<double> weights(entry_count);
  double weight_sum = 0.0;
  for (double& w : weights) {
    w = unit_double(rng) + 1.0 / 64.0;
    weight_sum += w;
  }

  std::vector<EnsembleEntry> entries(entry_count);
  double mean = 0.0;
  for (std::size_t i = 0; i < entry_count; ++i) {
    entries[i].weight = weights[i] / weight_sum;
    // u * v^4 spreads distances over several decades without touching libm.
    const double u = unit_double(rng);
    const double v = unit_double(rng);
    const double v2 = v * v;
    entries[i].distance = u * v2 * v2;
    mean += entries[i].weight * entries[i].distance;
  }
  if (target_mean && mean > 0.0) {
    const double scale = *target_mean / mean;
    for (EnsembleEntry& e : entries) {
      e.distance = std::min(1.0, e.distance * scale);
    }
  }

  // Renormalize the weights exactly once so the constructor's 1e-12 gate
  // is met regardless of entry_count.
  double total = 0.0;
  for (const EnsembleEntry& e : entries) total += e.weight;
  for (EnsembleEntry& e : entries) e.weight /= total;
  return DistanceEnsemble(std::move(entries));
}

double average_distance(const DistanceEnsemble& e) {
  double acc = 0.0;
  double comp = 0.0;
  for (const EnsembleEntry& entry : e.entries()) {
    const double term = entry.weight * entry.distance;
    const double t = acc + term;
    comp += std::abs(acc) >= std::abs(term) ? (acc - t) + term : (term - t) + acc;
    acc = t;
  }
  return acc + comp;
}

double exceedance_fraction(const DistanceEnsemble& e, double threshold) {
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("threshold must be > 0");
  }
  double fraction = 0.0;
  for (const EnsembleEntry& entry : e.entries()) {
    if (entry.distance >= threshold) fraction += entry.weight;
  }
  return fraction;
}

GuaranteeSplit individual_guarantee_split(double average,
                                          double split_exponent) {
  if (!(average > 0.0 && average < 1.0)) {
    throw std::invalid_argument("average must lie in (0, 1)");
  }
  if (!(split_exponent > 0.0 && split_exponent < 1.0)) {
    throw std::invalid_argument("split_exponent must lie in (0, 1)");
  }
  GuaranteeSplit split;
  split.conditional_epsilon = std::pow(average, split_exponent);
  split.exception_probability = std::pow(average, 1.0 - split_exponent);
  return split;
}

}  // namespace seccrit
