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

// Command-line surface: guarantee reports for (l, d, QBER), analysis of
// explicit distribution files, emission of bound-saturating distributions,
// and Markov verification of distance ensembles.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (infeasible or
// malformed input).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seccrit/bounds.hpp"
#include "seccrit/dist.hpp"
#include "seccrit/ensemble.hpp"
#include "seccrit/extremal.hpp"
#include "seccrit/io.hpp"
#include "seccrit/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

// Guess probabilities equal to the bound beyond this slack are reported
// as "tight"; matches the file-format tolerance.
constexpr double kTightTolerance = 1e-9;

struct GlobalOptions {
  std::string output;
  std::string format = "text";
  int precision = 6;
  std::uint64_t seed = 1;
};

void emit(const GlobalOptions& g, const std::string& document) {
  if (g.output.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream out(g.output);
  if (!out) {
    throw std::invalid_argument("cannot write output file: " + g.output);
  }
  out << document;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("cannot parse ") + what + " '" +
                                  token + "' as an integer");
    }
  }
  if (values.empty()) {
    throw std::invalid_argument(std::string(what) + " list is empty");
  }
  return values;
}

// "pos=bit,pos=bit" -> a subset outcome; positions may come in any order.
seccrit::SubsetOutcome parse_known(const std::string& text) {
  std::vector<std::pair<int, int>> assignments;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("known bits must look like pos=bit: '" +
                                  token + "'");
    }
    const int pos = std::stoi(token.substr(0, eq));
    const int bit = std::stoi(token.substr(eq + 1));
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("known bit values must be 0 or 1");
    }
    assignments.emplace_back(pos, bit);
  }
  if (assignments.empty()) {
    throw std::invalid_argument("known bits list is empty");
  }
  std::sort(assignments.begin(), assignments.end());
  std::vector<int> positions;
  std::uint32_t value = 0;
  for (const auto& [pos, bit] : assignments) {
    positions.push_back(pos);
    value = (value << 1) | static_cast<std::uint32_t>(bit);
  }
  return {seccrit::KeySubset(std::move(positions)), value};
}

std::vector<std::int64_t> default_subset_sizes(std::int64_t key_length) {
  std::vector<std::int64_t> sizes;
  for (std::int64_t m : {std::int64_t{1}, std::int64_t{8}, std::int64_t{64}}) {
    if (m <= key_length) sizes.push_back(m);
  }
  sizes.push_back(key_length);
  return sizes;
}

// --- report ---------------------------------------------------------------

struct ReportArgs {
  std::int64_t key_length = 0;
  double trace_distance = 0.0;
  std::optional<double> qber;
  std::string subset_sizes;
};

int run_report(const GlobalOptions& g, const ReportArgs& args) {
  seccrit::SecurityParameters params;
  params.key_length = args.key_length;
  params.trace_distance = args.trace_distance;
  params.qber = args.qber;

  std::vector<std::int64_t> sizes;
  if (args.subset_sizes.empty()) {
    sizes = default_subset_sizes(params.key_length);
  } else {
    for (int m : parse_int_list(args.subset_sizes, "subset size")) {
      sizes.push_back(m);
    }
  }
  const seccrit::GuaranteeReport report =
      seccrit::build_report(params, std::move(sizes));
  emit(g, g.format == "json"
              ? seccrit::render_report_json(report, g.precision)
              : seccrit::render_report_text(report, g.precision));
  return kExitOk;
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string dist_file;
  std::vector<std::string> subsets;
  std::string subset_sizes;
  std::string known;
};

struct SubsetRow {
  std::vector<int> positions;
  double guess_prob = 0.0;
  double bound = 0.0;
  std::string status;
};

SubsetRow make_row(const seccrit::KeyDistribution& dist,
                   const seccrit::KeySubset& subset, double epsilon) {
  SubsetRow row;
  row.positions.assign(subset.positions().begin(), subset.positions().end());
  row.guess_prob = seccrit::optimal_guess_prob(dist, subset);
  row.bound = seccrit::raw_guess_bound(subset.size(), epsilon);
  if (std::abs(row.guess_prob - row.bound) <= kTightTolerance) {
    row.status = "tight";
  } else if (row.guess_prob <= row.bound + kTightTolerance) {
    row.status = "satisfied";
  } else {
    row.status = "violated";
  }
  return row;
}

int run_analyze(const GlobalOptions& g, const AnalyzeArgs& args) {
  const seccrit::KeyDistribution dist = seccrit::io::load_distribution(args.dist_file);
  const int l = dist.key_length();
  const seccrit::KeyDistribution uniform = seccrit::KeyDistribution::uniform(l);

  std::vector<seccrit::KeySubset> subsets;
  for (const std::string& positions_text : args.subsets) {
    subsets.emplace_back(parse_int_list(positions_text, "subset position"));
  }
  if (!args.subset_sizes.empty()) {
    for (int m : parse_int_list(args.subset_sizes, "subset size")) {
      if (m < 1 || m > l) {
        throw std::invalid_argument("subset size out of range [1, l]");
      }
      subsets.push_back(seccrit::KeySubset::prefix(m));
    }
  }
  if (subsets.empty()) {
    for (std::int64_t m : default_subset_sizes(l)) {
      subsets.push_back(seccrit::KeySubset::prefix(static_cast<int>(m)));
    }
  }

  const double delta = seccrit::variational_distance(dist, uniform);
  const double ber = seccrit::eve_bit_error_rate(dist);

  std::vector<SubsetRow> rows;
  for (const seccrit::KeySubset& s : subsets) rows.push_back(make_row(dist, s, delta));

  std::optional<seccrit::SubsetOutcome> known;
  std::optional<seccrit::KeyDistribution> conditioned;
  double known_mass = 0.0;
  double conditioned_delta = 0.0;
  std::vector<SubsetRow> conditional_rows;
  if (!args.known.empty()) {
    known = parse_known(args.known);
    known_mass = seccrit::marginal(dist, known->subset)[known->value];
    conditioned = seccrit::condition(dist, *known);
    conditioned_delta = seccrit::variational_distance(*conditioned, uniform);
    for (const seccrit::KeySubset& s : subsets) {
      if (!known->subset.disjoint_with(s)) continue;
      conditional_rows.push_back(make_row(*conditioned, s, conditioned_delta));
    }
  }

  auto positions_text = [](const std::vector<int>& positions) {
    std::string text;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (i) text += ',';
      text += std::to_string(positions[i]);
    }
    return text;
  };

  if (g.format == "json") {
    auto num = [&](double v) { return seccrit::round_sig(v, g.precision); };
    nlohmann::ordered_json doc;
    doc["report"] = "distribution-analysis";
    doc["key_length"] = l;
    doc["variational_distance_to_uniform"] = num(delta);
    doc["eve_bit_error_rate"] = num(ber);
    doc["bound_epsilon"] = num(delta);
    doc["subsets"] = nlohmann::ordered_json::array();
    for (const SubsetRow& row : rows) {
      nlohmann::ordered_json item;
      item["positions"] = row.positions;
      item["size"] = row.positions.size();
      item["guess_prob"] = num(row.guess_prob);
      item["bound"] = num(row.bound);
      item["status"] = row.status;
      doc["subsets"].push_back(std::move(item));
    }
    if (known) {
      nlohmann::ordered_json k;
      k["positions"] = std::vector<int>(known->subset.positions().begin(),
                                        known->subset.positions().end());
      k["value"] = known->value;
      k["probability"] = num(known_mass);
      k["conditioned_distance_to_uniform"] = num(conditioned_delta);
      k["targets"] = nlohmann::ordered_json::array();
      for (const SubsetRow& row : conditional_rows) {
        nlohmann::ordered_json item;
        item["positions"] = row.positions;
        item["size"] = row.positions.size();
        item["conditional_guess_prob"] = num(row.guess_prob);
        item["bound"] = num(row.bound);
        item["status"] = row.status;
        k["targets"].push_back(std::move(item));
      }
      doc["known"] = std::move(k);
    } else {
      doc["known"] = nullptr;
    }
    emit(g, doc.dump(2) + "\n");
    return kExitOk;
  }

  auto fmt = [&](double v) { return seccrit::format_sig(v, g.precision); };
  std::ostringstream out;
  out << "distribution analysis\n";
  out << "  key length (l):                 " << l << " bits\n";
  out << "  distance to uniform (delta):    " << fmt(delta) << "\n";
  out << "  adversary bit error rate (p_b): " << fmt(ber) << "\n";
  out << "  bound level: eps = delta\n\n";
  out << "  subset guesses  (p1 vs 2^-m + eps)\n";
  out << "  positions        m   guess_prob      bound           status\n";
  for (const SubsetRow& row : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-15s  %-3zu %-15s %-15s %s\n",
                  positions_text(row.positions).c_str(), row.positions.size(),
                  fmt(row.guess_prob).c_str(), fmt(row.bound).c_str(),
                  row.status.c_str());
    out << line;
  }
  if (known) {
    out << "\n  known bits " << positions_text(std::vector<int>(
               known->subset.positions().begin(),
               known->subset.positions().end()))
        << " observed with probability " << fmt(known_mass) << "\n";
    out << "  conditioned distance to uniform: " << fmt(conditioned_delta)
        << "\n";
    out << "  conditional guesses on the remaining bits\n";
    out << "  positions        m   guess_prob      bound           status\n";
    for (const SubsetRow& row : conditional_rows) {
      char line[160];
      std::snprintf(line, sizeof(line), "  %-15s  %-3zu %-15s %-15s %s\n",
                    positions_text(row.positions).c_str(),
                    row.positions.size(), fmt(row.guess_prob).c_str(),
                    fmt(row.bound).c_str(), row.status.c_str());
      out << line;
    }
  }
  emit(g, out.str());
  return kExitOk;
}

// --- extremal ----------------------------------------------------------------

struct ExtremalArgs {
  int key_length = 0;
  double budget = 0.0;
  std::string target;
  std::uint32_t favored = 0;
};

int run_extremal(const GlobalOptions& g, const ExtremalArgs& args) {
  seccrit::KeySubset target =
      args.target.empty()
          ? seccrit::KeySubset::whole_key(args.key_length)
          : seccrit::KeySubset(parse_int_list(args.target, "target position"));
  const seccrit::ExtremalRecipe recipe(args.key_length, args.budget,
                                       std::move(target), args.favored);
  const seccrit::KeyDistribution dist =
      seccrit::construct_equality_distribution(recipe);
  emit(g, seccrit::io::serialize_distribution(dist));
  return kExitOk;
}

// --- ensemble ----------------------------------------------------------------

struct EnsembleArgs {
  std::string file;
  std::optional<double> threshold;
  std::optional<std::size_t> generate;
  std::optional<double> mean;
};

int run_ensemble(const GlobalOptions& g, const EnsembleArgs& args) {
  if (args.generate) {
    const seccrit::DistanceEnsemble sampled =
        seccrit::DistanceEnsemble::sample(*args.generate, g.seed, args.mean);
    emit(g, seccrit::io::serialize_ensemble(sampled));
    return kExitOk;
  }
  if (args.file.empty()) {
    throw std::invalid_argument("ensemble needs a file or --generate");
  }
  const seccrit::DistanceEnsemble ensemble = seccrit::io::load_ensemble(args.file);
  const double average = seccrit::average_distance(ensemble);
  const double threshold = args.threshold.value_or(
      average > 0.0 ? std::sqrt(average) : 0.5);
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("threshold must be > 0");
  }
  const double fraction = seccrit::exceedance_fraction(ensemble, threshold);
  const double markov_bound = std::min(1.0, average / threshold);
  const bool tight = std::abs(fraction - markov_bound) <= 1e-12;
  const bool satisfied = fraction <= markov_bound + 1e-12;

  if (g.format == "json") {
    auto num = [&](double v) { return seccrit::round_sig(v, g.precision); };
    nlohmann::ordered_json doc;
    doc["report"] = "ensemble-verification";
    doc["entry_count"] = ensemble.size();
    doc["average_distance"] = num(average);
    doc["threshold"] = num(threshold);
    doc["exceedance_fraction"] = num(fraction);
    doc["markov_bound"] = num(markov_bound);
    doc["tight"] = tight;
    doc["satisfied"] = satisfied;
    emit(g, doc.dump(2) + "\n");
    return kExitOk;
  }

  auto fmt = [&](double v) { return seccrit::format_sig(v, g.precision); };
  std::ostringstream out;
  out << "ensemble verification\n";
  out << "  entries:             " << ensemble.size() << "\n";
  out << "  average distance:    " << fmt(average) << "\n";
  out << "  threshold (t):       " << fmt(threshold) << "\n";
  out << "  exceedance fraction: " << fmt(fraction) << "\n";
  out << "  markov bound (avg/t): " << fmt(markov_bound) << "\n";
  if (tight) {
    out << "  result: exceedance = bound (tight)\n";
  } else if (satisfied) {
    out << "  result: exceedance <= bound (pass)\n";
  } else {
    out << "  result: exceedance EXCEEDS bound (fail)\n";
  }
  emit(g, out.str());
  return satisfied ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seccrit: operational security guarantees implied by a "
      "variational/trace-distance level d for an l-bit key"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--output", global.output,
                 "write the document to this file instead of stdout");
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", global.precision,
                 "significant digits for numeric output")
      ->check(CLI::Range(3, 17));
  app.add_option("--seed", global.seed, "seed for ensemble sampling");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand(
      "report", "closed-form guarantee report for (l, d, QBER)");
  report->fallthrough();
  report->add_option("--key-length", report_args.key_length, "key length in bits")
      ->required();
  report->add_option("--trace-distance", report_args.trace_distance,
                     "distance level d in [0, 1]")
      ->required();
  double qber_value = 0.0;
  CLI::Option* qber_opt =
      report->add_option("--qber", qber_value, "quantum bit error rate");
  report->add_option("--subset-sizes", report_args.subset_sizes,
                     "comma-separated subset sizes (default 1,8,64,l)");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "measure an explicit distribution file against the bounds");
  analyze->fallthrough();
  analyze->add_option("file", analyze_args.dist_file, "distribution file")
      ->required();
  analyze->add_option("--subset", analyze_args.subsets,
                      "comma-separated bit positions; repeatable");
  analyze->add_option("--subset-sizes", analyze_args.subset_sizes,
                      "prefix subsets of these sizes");
  analyze->add_option("--known", analyze_args.known,
                      "observed bits as pos=bit[,pos=bit...]");

  ExtremalArgs extremal_args;
  CLI::App* extremal = app.add_subcommand(
      "extremal", "emit a distribution saturating the guessing bound");
  extremal->fallthrough();
  extremal
      ->add_option("--key-length", extremal_args.key_length,
                   "key length in bits (dense scale)")
      ->required();
  extremal
      ->add_option("--budget", extremal_args.budget,
                   "variational distance to uniform to spend")
      ->required();
  extremal->add_option("--target", extremal_args.target,
                       "target subset positions (default: whole key)");
  extremal->add_option("--favored", extremal_args.favored,
                       "favored outcome value on the target subset");

  EnsembleArgs ensemble_args;
  CLI::App* ensemble = app.add_subcommand(
      "ensemble", "verify Markov exceedance for a distance ensemble");
  ensemble->fallthrough();
  ensemble->add_option("file", ensemble_args.file, "ensemble file");
  double threshold_value = 0.0;
  CLI::Option* threshold_opt = ensemble->add_option(
      "--threshold", threshold_value, "exceedance threshold t > 0");
  std::size_t generate_value = 0;
  CLI::Option* generate_opt = ensemble->add_option(
      "--generate", generate_value, "emit a sampled ensemble of this size");
  double mean_value = 0.0;
  CLI::Option* mean_opt = ensemble->add_option(
      "--mean", mean_value, "rescale sampled distances to this mean");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*qber_opt) report_args.qber = qber_value;
  if (*threshold_opt) ensemble_args.threshold = threshold_value;
  if (*generate_opt) ensemble_args.generate = generate_value;
  if (*mean_opt) ensemble_args.mean = mean_value;

  try {
    if (app.got_subcommand(report)) return run_report(global, report_args);
    if (app.got_subcommand(analyze)) return run_analyze(global, analyze_args);
    if (app.got_subcommand(extremal)) return run_extremal(global, extremal_args);
    if (app.got_subcommand(ensemble)) return run_ensemble(global, ensemble_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
