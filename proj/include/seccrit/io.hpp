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

#ifndef SECCRIT_IO_HPP
#define SECCRIT_IO_HPP

#include <filesystem>
#include <string>

#include "seccrit/dist.hpp"
#include "seccrit/ensemble.hpp"

// File formats. Distributions are JSON documents with fields
//
//   {"key_length": <int>, "probs": [<2^l reals>] | "uniform"}
//
// Written probabilities round-trip exactly (17 significant digits). On
// load the entries must sum to 1 within 1e-9 -- looser than the in-memory
// 1e-12 so decimal serialization from other tools is readable -- and are
// then rescaled by their exact sum; anything outside 1e-9 is rejected.
//
// Ensembles are JSON documents with
//
//   {"entries": [{"weight": w, "distance": d, "distribution": "file"?}]}
//
// where the optional distribution reference is resolved relative to the
// ensemble file's directory.

namespace seccrit::io {

KeyDistribution parse_distribution(const std::string& text);
KeyDistribution load_distribution(const std::filesystem::path& path);

// Emits the dense table, or the "uniform" shorthand when every entry is
// exactly 2^-l.
std::string serialize_distribution(const KeyDistribution& dist);
void save_distribution(const KeyDistribution& dist,
                       const std::filesystem::path& path);

DistanceEnsemble parse_ensemble(const std::string& text,
                                const std::filesystem::path& base_dir = {});
DistanceEnsemble load_ensemble(const std::filesystem::path& path);

std::string serialize_ensemble(const DistanceEnsemble& e);
void save_ensemble(const DistanceEnsemble& e,
                   const std::filesystem::path& path);

}  // namespace seccrit::io

#endif  // SECCRIT_IO_HPP
