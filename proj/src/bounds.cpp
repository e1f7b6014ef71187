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

#include "seccrit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace seccrit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Largest m with 2^-m still representable (subnormal floor).
constexpr std::int64_t kUnderflowExponent = 1074;

void check_unit_interval(double d, const char* name) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void SecurityParameters::validate() const {
  if (key_length < 1) {
    throw std::invalid_argument("key_length must be >= 1");
  }
  check_unit_interval(trace_distance, "trace_distance");
  if (qber && !(*qber >= 0.0 && *qber <= 0.5)) {
    throw std::invalid_argument("qber must lie in [0, 1/2]");
  }
}

double log2_add_exp2(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp2(lo - hi)) * std::numbers::log2e;
}

double log2_guess_bound(std::int64_t subset_size, double epsilon) {
  if (subset_size < 1) throw std::invalid_argument("subset_size must be >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  const double log_eps = epsilon > 0.0 ? std::log2(epsilon) : kNegInf;
  return log2_add_exp2(-static_cast<double>(subset_size), log_eps);
}

double raw_guess_bound(std::int64_t subset_size, double epsilon) {
  if (subset_size < 1) throw std::invalid_argument("subset_size must be >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (subset_size <= kUnderflowExponent) {
    return std::exp2(-static_cast<double>(subset_size)) + epsilon;
  }
  return epsilon;
}

double markov_individual_epsilon(double trace_distance, int averaging_levels) {
  check_unit_interval(trace_distance, "trace_distance");
  switch (averaging_levels) {
    case 1:
      return std::sqrt(trace_distance);
    case 2:
      return std::cbrt(trace_distance);
    default:
      throw std::invalid_argument("averaging_levels must be 1 or 2");
  }
}

double ber_gap_bound(double trace_distance) {
  check_unit_interval(trace_distance, "trace_distance");
  static const double denom = 2.0 * std::sqrt(std::numbers::log2e);
  return std::pow(trace_distance, 0.25) / denom;
}

double effective_uniform_bits(std::int64_t key_length, double epsilon) {
  if (key_length < 1) throw std::invalid_argument("key_length must be >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (epsilon == 0.0) return static_cast<double>(key_length);
  return -log2_add_exp2(-static_cast<double>(key_length), std::log2(epsilon));
}

double convergence_exponent(std::int64_t key_length, double trace_distance) {
  if (key_length < 1) throw std::invalid_argument("key_length must be >= 1");
  if (!(trace_distance > 0.0 && trace_distance < 1.0)) {
    throw std::domain_error(
        "convergence exponent is undefined unless 0 < d < 1");
  }
  return -std::log2(trace_distance) / static_cast<double>(key_length);
}

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("binary entropy argument must lie in [0, 1]");
  }
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double leak_ec(double qber) {
  if (!(qber >= 0.0 && qber <= 0.5)) {
    throw std::invalid_argument("qber must lie in [0, 1/2]");
  }
  return binary_entropy(qber);
}

GuaranteeReport build_report(const SecurityParameters& params,
                             std::vector<std::int64_t> subset_sizes) {
  params.validate();
  for (std::int64_t m : subset_sizes) {
    if (m < 1 || m > params.key_length) {
      throw std::invalid_argument("subset_sizes entries must lie in [1, l]");
    }
  }
  std::sort(subset_sizes.begin(), subset_sizes.end());
  subset_sizes.erase(std::unique(subset_sizes.begin(), subset_sizes.end()),
                     subset_sizes.end());

  const double d = params.trace_distance;
  GuaranteeReport report;
  report.params = params;
  report.subset_sizes = subset_sizes;
  report.individual_epsilon = markov_individual_epsilon(d, 2);
  report.individual_epsilon_single_avg = markov_individual_epsilon(d, 1);

  auto bound_row = [](std::int64_t m, double eps) {
    SubsetBound row;
    row.subset_size = m;
    row.bound = std::min(1.0, raw_guess_bound(m, eps));
    row.log2_bound = log2_guess_bound(m, eps);
    return row;
  };
  for (std::int64_t m : subset_sizes) {
    report.raw_subset_bound_avg.push_back(bound_row(m, d));
    report.kpa_bound_avg.push_back(bound_row(m, d));
    report.raw_subset_bound_individual.push_back(
        bound_row(m, report.individual_epsilon));
  }

  report.ber_gap_bound = ber_gap_bound(d);
  report.effective_uniform_bits_avg =
      effective_uniform_bits(params.key_length, d);
  report.effective_uniform_bits_individual =
      effective_uniform_bits(params.key_length, report.individual_epsilon);

  if (d > 0.0 && d < 1.0) {
    report.lambda = convergence_exponent(params.key_length, d);
  }
  if (params.qber) {
    report.leak_ec = leak_ec(*params.qber);
  }

  // Scale check in the log domain: d <= 2^-l / 10.
  report.near_ideal_scale =
      d == 0.0 || std::log2(d) <= -static_cast<double>(params.key_length) -
                                      std::log2(10.0);
  report.wrong_interpretation_claim = 1.0 - d;
  return report;
}

}  // namespace seccrit
