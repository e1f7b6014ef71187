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

#include "seccrit/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace seccrit {

namespace {

constexpr const char* kWrongInterpretationStatement =
    "the key is ideal except with probability d";
constexpr const char* kCorrectReadingStatement =
    "d bounds the adversary's advantage in the averaged guessing guarantees; "
    "a key with d > 0 is non-uniform with certainty, and d must be judged "
    "against 2^-l, not against 1";
constexpr const char* kBerConstantNote =
    "the BER gap constant is read as d^(1/4) / (2*sqrt(log2 e)); the "
    "grouping (d^(1/4)/2) * sqrt(log2 e) would differ by a factor of "
    "log2 e = 1.44";
constexpr const char* kLeakEcNote =
    "leak_ec is reported, never subtracted: subtracting error-correction "
    "leakage from the key length presumes a near-uniform key";

// Bound the refuted reading would promise for an m-bit subset: ideal with
// probability 1-d, anything otherwise.
double refuted_reading_bound(std::int64_t m, double d) {
  return std::min(1.0, (1.0 - d) * raw_guess_bound(m, 0.0) + d);
}

std::int64_t floor_bits(double bits) {
  return static_cast<std::int64_t>(std::floor(bits));
}

}  // namespace

std::string format_sig(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
  return buffer;
}

double round_sig(double value, int precision) {
  return std::strtod(format_sig(value, precision).c_str(), nullptr);
}

std::string render_report_text(const GuaranteeReport& report, int precision) {
  const double d = report.params.trace_distance;
  auto g = [precision](double v) { return format_sig(v, precision); };
  std::ostringstream out;

  out << "security guarantee report\n";
  out << "  key length (l):     " << report.params.key_length << " bits\n";
  out << "  trace distance (d): " << g(d) << "\n";
  if (report.params.qber) {
    out << "  qber:               " << g(*report.params.qber) << "\n";
  }
  out << "\n";

  out << "guessing-probability bounds  p1 <= 2^-m + eps\n";
  out << "  averaged 'eps = d' holds only on average over key values and\n";
  out << "  privacy-amplification codes; the individual column uses the\n";
  out << "  Markov-converted eps = d^(1/3); the refuted column shows what\n";
  out << "  the failure-probability reading would promise instead.\n";
  out << "  m (bits)      averaged (eps=d)    individual (eps=d^1/3)  "
         "refuted reading     log2 averaged\n";
  for (std::size_t i = 0; i < report.subset_sizes.size(); ++i) {
    const std::int64_t m = report.subset_sizes[i];
    char line[192];
    std::snprintf(line, sizeof(line), "  %-12lld  %-18s  %-22s  %-18s  %s\n",
                  static_cast<long long>(m),
                  g(report.raw_subset_bound_avg[i].bound).c_str(),
                  g(report.raw_subset_bound_individual[i].bound).c_str(),
                  g(refuted_reading_bound(m, d)).c_str(),
                  g(report.raw_subset_bound_avg[i].log2_bound).c_str());
    out << line;
  }
  out << "  known-plaintext bounds for the unseen bits take the same form\n";
  out << "  and epsilon levels as the rows above.\n\n";

  out << "individual-guarantee conversion\n";
  out << "  individual (d^1/3): " << g(report.individual_epsilon) << "\n";
  out << "  single-average variant (d^1/2): "
      << g(report.individual_epsilon_single_avg) << "\n\n";

  out << "adversary bit error rate (whole key, no subset guarantee)\n";
  out << "  guaranteed gap: 1/2 - p_b <= " << g(report.ber_gap_bound)
      << "\n\n";

  out << "effective uniform key length (whole-key guessing equivalent)\n";
  out << "  effective uniform bits: "
      << floor_bits(report.effective_uniform_bits_avg) << " (exact "
      << g(report.effective_uniform_bits_avg) << ", averaged eps = d)\n";
  out << "  effective uniform bits, individual: "
      << floor_bits(report.effective_uniform_bits_individual) << " (exact "
      << g(report.effective_uniform_bits_individual) << ", eps = d^1/3)\n\n";

  out << "convergence exponent (d = 2^-lambda*l; 1 is near-ideal)\n";
  if (report.lambda) {
    out << "  lambda: " << g(*report.lambda) << "\n\n";
  } else {
    out << "  lambda: undefined for d = " << g(d) << "\n\n";
  }

  out << "scale check\n";
  if (report.near_ideal_scale) {
    out << "  d <= 2^-l/10: small on the scale that matters (relative to "
           "2^-l)\n\n";
  } else {
    out << "  d > 2^-l/10: small relative to 1 but NOT relative to 2^-l; "
           "the key is far from uniform\n\n";
  }

  if (report.leak_ec) {
    out << "error-correction leakage\n";
    out << "  leak_ec = h(qber) = " << g(*report.leak_ec)
        << " bits per key bit\n";
    out << "  " << kLeakEcNote;
    if (!report.near_ideal_scale) {
      out << "; at this d level the key is not near-uniform, so applying "
             "it would be invalid";
    }
    out << "\n\n";
  }

  out << "interpretation comparison\n";
  out << "  correct reading: " << kCorrectReadingStatement << "\n";
  out << "  refuted reading: \"" << kWrongInterpretationStatement
      << "\" would promise idealness with probability 1 - d = "
      << g(report.wrong_interpretation_claim) << "\n\n";

  out << "footnote: " << kBerConstantNote << "\n";
  return out.str();
}

std::string render_report_json(const GuaranteeReport& report, int precision) {
  auto num = [precision](double v) { return round_sig(v, precision); };
  nlohmann::ordered_json doc;
  doc["report"] = "security-guarantees";
  doc["key_length"] = report.params.key_length;
  doc["trace_distance"] = report.params.trace_distance;
  if (report.params.qber) {
    doc["qber"] = num(*report.params.qber);
  } else {
    doc["qber"] = nullptr;
  }
  doc["subset_sizes"] = report.subset_sizes;

  auto rows = [&](const std::vector<SubsetBound>& bounds) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SubsetBound& b : bounds) {
      nlohmann::ordered_json row;
      row["subset_size"] = b.subset_size;
      row["bound"] = num(b.bound);
      row["log2_bound"] = num(b.log2_bound);
      arr.push_back(std::move(row));
    }
    return arr;
  };
  doc["raw_subset_bound_avg"] = rows(report.raw_subset_bound_avg);
  doc["kpa_bound_avg"] = rows(report.kpa_bound_avg);
  doc["raw_subset_bound_individual"] = rows(report.raw_subset_bound_individual);

  doc["individual_epsilon"] = num(report.individual_epsilon);
  doc["individual_epsilon_single_avg"] =
      num(report.individual_epsilon_single_avg);
  doc["ber_gap_bound"] = num(report.ber_gap_bound);
  doc["effective_uniform_bits_avg"] = num(report.effective_uniform_bits_avg);
  doc["effective_uniform_bits_avg_floor"] =
      floor_bits(report.effective_uniform_bits_avg);
  doc["effective_uniform_bits_individual"] =
      num(report.effective_uniform_bits_individual);
  doc["effective_uniform_bits_individual_floor"] =
      floor_bits(report.effective_uniform_bits_individual);
  if (report.lambda) {
    doc["lambda"] = num(*report.lambda);
  } else {
    doc["lambda"] = nullptr;
  }
  if (report.leak_ec) {
    doc["leak_ec"] = num(*report.leak_ec);
    doc["leak_ec_note"] = kLeakEcNote;
  } else {
    doc["leak_ec"] = nullptr;
  }
  doc["near_ideal_scale"] = report.near_ideal_scale;

  nlohmann::ordered_json wrong;
  wrong["statement"] = kWrongInterpretationStatement;
  wrong["claimed_ideal_probability"] = num(report.wrong_interpretation_claim);
  wrong["status"] = "refuted";
  wrong["correct_reading"] = kCorrectReadingStatement;
  doc["wrong_interpretation_claim"] = std::move(wrong);

  doc["notes"] = nlohmann::ordered_json::array({kBerConstantNote});
  return doc.dump(2) + "\n";
}

}  // namespace seccrit
