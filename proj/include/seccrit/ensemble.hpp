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

#ifndef SECCRIT_ENSEMBLE_HPP
#define SECCRIT_ENSEMBLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "seccrit/dist.hpp"

// Weighted collections of per-instance distance values, modeling a
// guarantee that holds only on average: the average-to-individual gap is
// exactly a Markov tail bound, and converting it costs an exponent.

namespace seccrit {

struct EnsembleEntry {
  double weight = 0.0;    // > 0, weights sum to 1 over the ensemble
  double distance = 0.0;  // in [0, 1]
  // Optionally the explicit posterior realizing this distance to uniform.
  std::optional<KeyDistribution> distribution;
};

class DistanceEnsemble {
 public:
  // Validates weights (positive, sum 1 within 1e-12), distance ranges, and
  // that any attached distribution has matching distance within 1e-9.
  explicit DistanceEnsemble(std::vector<EnsembleEntry> entries);

  // The ensemble on which the Markov bound is an equality: weight
  // average/threshold sits at `threshold`, the rest at zero.
  static DistanceEnsemble two_point_tight(double average, double threshold);

  // Seeded random ensemble; generation uses only IEEE arithmetic on the
  // standard-specified mt19937_64 stream, so identical seeds reproduce
  // identical ensembles across platforms. Distances span several decades.
  // When target_mean is given, distances are rescaled to hit it exactly.
  static DistanceEnsemble sample(std::size_t entry_count, std::uint64_t seed,
                                 std::optional<double> target_mean = {});

  const std::vector<EnsembleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<EnsembleEntry> entries_;
};

// Weighted mean distance.
double average_distance(const DistanceEnsemble& e);

// Total weight of entries at distance >= threshold; by Markov at most
// average_distance(e) / threshold. Threshold must be positive.
double exceedance_fraction(const DistanceEnsemble& e, double threshold);

struct GuaranteeSplit {
  double exception_probability = 0.0;  // weight allowed above the threshold
  double conditional_epsilon = 0.0;    // level guaranteed off the exceptions
};

// Splits one averaging level: except with probability d^(1-a), the
// instance-level distance is below d^a. The symmetric a = 1/2 applied to
// two nested averages is what yields the d^(1/3)-scale individual level.
GuaranteeSplit individual_guarantee_split(double average,
                                          double split_exponent = 0.5);

}  // namespace seccrit

#endif  // SECCRIT_ENSEMBLE_HPP
