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

// Acceptance suite: the toolkit's externally checkable claims, one
// pass/fail line per criterion, each with its stated tolerance and
// runtime budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "seccrit/bounds.hpp"
#include "seccrit/dist.hpp"
#include "seccrit/ensemble.hpp"
#include "seccrit/extremal.hpp"
#include "seccrit/io.hpp"
#include "subprocess.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& message) {
    if (!ok && pass) {
      pass = false;
      detail = message;
    }
  }
};

int failures = 0;

template <typename F>
void criterion(int id, const char* label, double budget_ms, F&& body) {
  Outcome outcome;
  const auto start = Clock::now();
  body(outcome);
  const double elapsed_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
          Clock::now() - start)
          .count();
  outcome.require(elapsed_ms < budget_ms,
                  "runtime " + std::to_string(elapsed_ms) + " ms over budget");
  std::printf("%s [%2d] %s%s%s  [%.3f ms]\n", outcome.pass ? "PASS" : "FAIL",
              id, label, outcome.detail.empty() ? "" : " -- ",
              outcome.detail.c_str(), elapsed_ms);
  if (!outcome.pass) ++failures;
}

// Timed single evaluation for the sub-millisecond criteria: warm up once,
// then charge only the measured call.
template <typename F>
double timed_call(F&& fn, double& out_ms) {
  volatile double sink = fn();
  const auto start = Clock::now();
  sink = fn();
  out_ms = std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
               Clock::now() - start)
               .count();
  return sink;
}

std::vector<int> mask_positions(unsigned mask, int key_length) {
  std::vector<int> positions;
  for (int i = 0; i < key_length; ++i) {
    if (mask & (1u << i)) positions.push_back(i);
  }
  return positions;
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion(1, "66-bit equivalence for (l=1e6, d=1e-20)", 1000.0, [](Outcome& o) {
    double ms = 0.0;
    const double bits = timed_call(
        [] { return seccrit::effective_uniform_bits(1000000, 1e-20); }, ms);
    o.require(bits >= 66.0 && bits <= 66.5,
              "bits = " + std::to_string(bits) + " outside [66.0, 66.5]");
    o.require(static_cast<int>(std::floor(bits)) == 66, "floor display != 66");
    o.require(ms < 1.0, "call took " + std::to_string(ms) + " ms");
  });

  criterion(2, "22-bit equivalence after Markov conversion", 1000.0,
            [](Outcome& o) {
              double ms = 0.0;
              const double bits = timed_call(
                  [] {
                    return seccrit::effective_uniform_bits(1000000,
                                                           std::cbrt(1e-20));
                  },
                  ms);
              o.require(bits >= 22.0 && bits <= 22.5,
                        "bits = " + std::to_string(bits) +
                            " outside [22.0, 22.5]");
              o.require(static_cast<int>(std::floor(bits)) == 22,
                        "floor display != 22");
              o.require(ms < 1.0, "call took " + std::to_string(ms) + " ms");
            });

  criterion(3, "convergence exponent lambda for (l=1e6, d=1e-20)", 1000.0,
            [](Outcome& o) {
              double ms = 0.0;
              const double lambda = timed_call(
                  [] { return seccrit::convergence_exponent(1000000, 1e-20); },
                  ms);
              o.require(std::abs(lambda - 6.64e-5) <= 1e-7,
                        "lambda = " + std::to_string(lambda));
              o.require(ms < 1.0, "call took " + std::to_string(ms) + " ms");
            });

  criterion(4, "d^(1/3) ladder: 1e-20, 1e-14, 1e-6", 1000.0, [](Outcome& o) {
    const struct {
      double d;
      double expected;
    } ladder[] = {{1e-20, 2.154434690031884e-07},
                  {1e-14, 2.154434690031884e-05},
                  {1e-6, 1e-2}};
    for (const auto& step : ladder) {
      double ms = 0.0;
      const double value = timed_call(
          [&step] { return seccrit::markov_individual_epsilon(step.d, 2); },
          ms);
      o.require(std::abs(value - step.expected) <= 1e-3 * step.expected,
                "d = " + std::to_string(step.d) + " -> " +
                    std::to_string(value));
      o.require(ms < 1.0, "call took " + std::to_string(ms) + " ms");
    }
    o.require(seccrit::markov_individual_epsilon(1e-20, 2) > 1e-7,
              "1e-20 case not > 1e-7");
    o.require(seccrit::markov_individual_epsilon(1e-14, 2) > 1e-5,
              "1e-14 case not > 1e-5");
  });

  criterion(5, "guessing bound is tight: construction and greedy oracle",
            10000.0, [](Outcome& o) {
              for (int l = 2; l <= 8; ++l) {
                for (int m = 1; m <= l; ++m) {
                  const seccrit::KeySubset target = seccrit::KeySubset::prefix(m);
                  for (const double eps : {0.001, 0.01, 0.1}) {
                    if (eps > 1.0 - std::exp2(-m)) continue;
                    const seccrit::KeyDistribution p =
                        seccrit::construct_equality_distribution(
                            seccrit::ExtremalRecipe(l, eps, target, 0));
                    const double expected = std::exp2(-m) + eps;
                    const double guess = seccrit::optimal_guess_prob(p, target);
                    const double delta = seccrit::variational_distance(
                        p, seccrit::KeyDistribution::uniform(l));
                    const double oracle =
                        seccrit::max_guess_given_budget(l, target, eps);
                    const std::string where = " at l=" + std::to_string(l) +
                                              " m=" + std::to_string(m) +
                                              " eps=" + std::to_string(eps);
                    o.require(std::abs(guess - expected) <= 1e-12,
                              "guess off" + where);
                    o.require(std::abs(delta - eps) <= 1e-12,
                              "distance off" + where);
                    o.require(std::abs(oracle - expected) <= 1e-12,
                              "oracle off" + where);
                  }
                }
              }
            });

  criterion(6, "pointwise bound p1 <= 2^-m + delta on 1e4 random posteriors",
            60000.0, [](Outcome& o) {
              long violations = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : violations)
              for (int i = 0; i < 10000; ++i) {
                const int l = 2 + (i % 9);
                std::mt19937_64 rng(1000 + i);
                const seccrit::KeyDistribution p =
                    testutil::random_distribution(l, rng);
                const double delta = seccrit::variational_distance(
                    p, seccrit::KeyDistribution::uniform(l));
                for (unsigned mask = 1; mask < (1u << l); ++mask) {
                  const int size = std::popcount(mask);
                  if (size > 4 && size != l) continue;
                  const seccrit::KeySubset subset(mask_positions(mask, l));
                  const double guess = seccrit::optimal_guess_prob(p, subset);
                  if (guess > std::exp2(-size) + delta + 1e-12) ++violations;
                }
              }
              o.require(violations == 0,
                        std::to_string(violations) + " violations");
            });

  criterion(7, "BER gap chain 1/2 - p_b <= delta <= d^(1/4)/(2 sqrt(log2 e))",
            60000.0, [](Outcome& o) {
              const double constant = 2.0 * std::sqrt(std::numbers::log2e);
              long violations = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : violations)
              for (int i = 0; i < 10000; ++i) {
                const int l = 2 + (i % 9);
                std::mt19937_64 rng(1000 + i);
                const seccrit::KeyDistribution p =
                    testutil::random_distribution(l, rng);
                const double delta = seccrit::variational_distance(
                    p, seccrit::KeyDistribution::uniform(l));
                const double gap = 0.5 - seccrit::eve_bit_error_rate(p);
                if (gap > delta + 1e-12) ++violations;
                if (delta <= 0.3 &&
                    delta > std::pow(delta, 0.25) / constant + 1e-12) {
                  ++violations;
                }
              }
              o.require(violations == 0,
                        std::to_string(violations) + " violations");
            });

  criterion(8, "Markov exceedance on 1e4 random ensembles + tight two-point",
            30000.0, [](Outcome& o) {
              long violations = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : violations)
              for (int i = 0; i < 10000; ++i) {
                std::mt19937_64 rng(5000 + i);
                const std::size_t count = 1 + (rng() % 64);
                const seccrit::DistanceEnsemble e =
                    seccrit::DistanceEnsemble::sample(count, rng());
                const double average = seccrit::average_distance(e);
                const double thresholds[] = {
                    average > 0.0 ? std::sqrt(average) : 1e-3,
                    average > 0.0 ? 10.0 * average : 1e-3};
                for (const double t : thresholds) {
                  if (seccrit::exceedance_fraction(e, t) >
                      average / t + 1e-12) {
                    ++violations;
                  }
                }
              }
              o.require(violations == 0,
                        std::to_string(violations) + " violations");

              const seccrit::DistanceEnsemble tight =
                  seccrit::DistanceEnsemble::two_point_tight(1e-3, 0.05);
              const double fraction = seccrit::exceedance_fraction(tight, 0.05);
              const double bound = seccrit::average_distance(tight) / 0.05;
              o.require(std::abs(fraction - bound) <= 1e-12,
                        "two-point ensemble not tight");
            });

  criterion(9, "budgeted constructions are never uniform", 1000.0,
            [](Outcome& o) {
              for (int l = 2; l <= 8; ++l) {
                for (int m = 1; m <= l; ++m) {
                  for (const double eps : {0.001, 0.01, 0.1}) {
                    if (eps > 1.0 - std::exp2(-m)) continue;
                    const seccrit::KeyDistribution p =
                        seccrit::construct_equality_distribution(
                            seccrit::ExtremalRecipe(
                                l, eps, seccrit::KeySubset::prefix(m), 0));
                    if (seccrit::is_uniform(p, eps * std::exp2(-l))) {
                      o.require(false, "uniform at l=" + std::to_string(l) +
                                           " m=" + std::to_string(m));
                    }
                  }
                }
              }
            });

  criterion(10, "error-correction leakage values", 1000.0, [](Outcome& o) {
    double ms = 0.0;
    const double h011 = timed_call([] { return seccrit::leak_ec(0.11); }, ms);
    o.require(seccrit::leak_ec(0.0) == 0.0, "h(0) != 0");
    o.require(seccrit::leak_ec(0.5) == 1.0, "h(0.5) != 1");
    // Independent high-precision reference for h(0.11).
    o.require(std::abs(h011 - 0.4999159581645280) <= 1e-9,
              "h(0.11) = " + std::to_string(h011));
    o.require(ms < 1.0, "call took " + std::to_string(ms) + " ms");
  });

  criterion(11, "CLI round trip and byte-stable machine report", 60000.0,
            [](Outcome& o) {
              testutil::TempDir dir("acceptance");
              const std::string file = (dir.path() / "extremal.json").string();
              const auto emit = testutil::run_command(
                  testutil::cli_path() +
                  " extremal --key-length 3 --budget 0.1 --output " + file);
              o.require(emit.exit_code == 0, "extremal emission failed");

              const auto analyze = testutil::run_command(
                  testutil::cli_path() + " analyze " + file + " --format json");
              o.require(analyze.exit_code == 0, "analyze failed");
              if (analyze.exit_code == 0) {
                const nlohmann::json doc = nlohmann::json::parse(analyze.output);
                const double delta =
                    doc["variational_distance_to_uniform"].get<double>();
                o.require(std::abs(delta - 0.1) <= 1e-9,
                          "round-trip delta = " + std::to_string(delta));
                bool tight = false;
                for (const auto& row : doc["subsets"]) {
                  if (row["size"].get<int>() == 3) tight = row["status"] == "tight";
                }
                o.require(tight, "whole-key bound not flagged tight");
              }

              const std::string report_cmd =
                  testutil::cli_path() +
                  " report --key-length 1000000 --trace-distance 1e-20 "
                  "--format json";
              const auto first = testutil::run_command(report_cmd);
              const auto second = testutil::run_command(report_cmd);
              o.require(first.exit_code == 0, "report failed");
              o.require(first.output == second.output,
                        "machine report not byte-stable");
              const auto text = testutil::run_command(
                  testutil::cli_path() +
                  " report --key-length 1000000 --trace-distance 1e-20");
              o.require(text.output.find("effective uniform bits: 66") !=
                            std::string::npos,
                        "text report lacks the 66-bit line");
            });

  std::printf("%s: %d of 11 criteria failed\n",
              failures == 0 ? "SUCCESS" : "FAILURE", failures);
  return failures == 0 ? 0 : 1;
}
