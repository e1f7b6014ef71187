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

#include "seccrit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "seccrit/kernels.hpp"

namespace seccrit::io {

namespace {

// Sum tolerance for files; decimal writers cannot hit 1e-12.
constexpr double kFileSumTolerance = 1e-9;

nlohmann::json parse_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " +
                                e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path.string());
  }
  out << text;
  if (!out) {
    throw std::invalid_argument("write failed: " + path.string());
  }
}

}  // namespace

KeyDistribution parse_distribution(const std::string& text) {
  const nlohmann::json doc = parse_json(text, "distribution file");
  if (!doc.is_object() || !doc.contains("key_length") ||
      !doc.contains("probs")) {
    throw std::invalid_argument(
        "distribution file needs fields key_length and probs");
  }
  if (!doc["key_length"].is_number_integer()) {
    throw std::invalid_argument("key_length must be an integer");
  }
  const int key_length = doc["key_length"].get<int>();
  if (key_length < 1 || key_length > kMaxDenseKeyLength) {
    throw std::invalid_argument("key_length out of range [1, 24]");
  }

  const nlohmann::json& probs = doc["probs"];
  if (probs.is_string()) {
    if (probs.get<std::string>() != "uniform") {
      throw std::invalid_argument("probs string form must be \"uniform\"");
    }
    return KeyDistribution::uniform(key_length);
  }
  if (!probs.is_array()) {
    throw std::invalid_argument("probs must be an array or \"uniform\"");
  }
  const std::size_t expected = std::size_t{1} << key_length;
  if (probs.size() != expected) {
    throw std::invalid_argument("probs has " + std::to_string(probs.size()) +
                                " entries, expected " +
                                std::to_string(expected));
  }
  std::vector<double> values(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (!probs[i].is_number()) {
      throw std::invalid_argument("probs[" + std::to_string(i) +
                                  "] is not a number");
    }
    values[i] = probs[i].get<double>();
    if (!(values[i] >= 0.0)) {
      throw std::invalid_argument("probs[" + std::to_string(i) +
                                  "] is negative");
    }
  }
  const double total = kernels::sum(values);
  if (std::abs(total - 1.0) > kFileSumTolerance) {
    throw std::invalid_argument("normalization failure: probs sum to " +
                                std::to_string(total) +
                                ", outside 1 +/- 1e-9");
  }
  if (total != 1.0) {
    for (double& v : values) v /= total;
  }
  return KeyDistribution(key_length, std::move(values));
}

KeyDistribution load_distribution(const std::filesystem::path& path) {
  return parse_distribution(read_file(path));
}

std::string serialize_distribution(const KeyDistribution& dist) {
  nlohmann::ordered_json doc;
  doc["key_length"] = dist.key_length();
  const double u = std::exp2(-dist.key_length());
  bool exactly_uniform = true;
  for (double v : dist.probs()) {
    if (v != u) {
      exactly_uniform = false;
      break;
    }
  }
  if (exactly_uniform) {
    doc["probs"] = "uniform";
  } else {
    doc["probs"] = std::vector<double>(dist.probs().begin(),
                                       dist.probs().end());
  }
  return doc.dump(2) + "\n";
}

void save_distribution(const KeyDistribution& dist,
                       const std::filesystem::path& path) {
  write_file(path, serialize_distribution(dist));
}

DistanceEnsemble parse_ensemble(const std::string& text,
                                const std::filesystem::path& base_dir) {
  const nlohmann::json doc = parse_json(text, "ensemble file");
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array() || doc["entries"].empty()) {
    throw std::invalid_argument(
        "ensemble file needs a non-empty entries array");
  }
  std::vector<EnsembleEntry> entries;
  entries.reserve(doc["entries"].size());
  for (const nlohmann::json& item : doc["entries"]) {
    if (!item.is_object() || !item.contains("weight") ||
        !item.contains("distance") || !item["weight"].is_number() ||
        !item["distance"].is_number()) {
      throw std::invalid_argument(
          "ensemble entries need numeric weight and distance");
    }
    EnsembleEntry entry;
    entry.weight = item["weight"].get<double>();
    entry.distance = item["distance"].get<double>();
    if (item.contains("distribution")) {
      if (!item["distribution"].is_string()) {
        throw std::invalid_argument("distribution reference must be a path");
      }
      std::filesystem::path ref = item["distribution"].get<std::string>();
      if (ref.is_relative() && !base_dir.empty()) ref = base_dir / ref;
      entry.distribution = load_distribution(ref);
    }
    entries.push_back(std::move(entry));
  }
  return DistanceEnsemble(std::move(entries));
}

DistanceEnsemble load_ensemble(const std::filesystem::path& path) {
  return parse_ensemble(read_file(path), path.parent_path());
}

std::string serialize_ensemble(const DistanceEnsemble& e) {
  nlohmann::ordered_json doc;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const EnsembleEntry& entry : e.entries()) {
    nlohmann::ordered_json item;
    item["weight"] = entry.weight;
    item["distance"] = entry.distance;
    doc["entries"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

void save_ensemble(const DistanceEnsemble& e,
                   const std::filesystem::path& path) {
  write_file(path, serialize_ensemble(e));
}

}  // namespace seccrit::io
