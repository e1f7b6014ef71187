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

#ifndef SECCRIT_TESTS_HELPERS_HPP
#define SECCRIT_TESTS_HELPERS_HPP

#include <unistd.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "seccrit/dist.hpp"
#include "seccrit/kernels.hpp"

namespace testutil {

inline double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random point on the probability simplex over 2^l keys; one draw in four
// is spiky (4th powers) so the corpus covers large-deviation posteriors.
inline seccrit::KeyDistribution random_distribution(int key_length,
                                                    std::mt19937_64& rng) {
  const std::size_t n = std::size_t{1} << key_length;
  std::vector<double> probs(n);
  const bool spiky = (rng() & 3u) == 0;
  for (double& p : probs) {
    const double u = unit(rng) + 1e-12;
    p = spiky ? u * u * u * u : u;
  }
  const double total = seccrit::kernels::sum(probs);
  for (double& p : probs) p /= total;
  return seccrit::KeyDistribution(key_length, std::move(probs));
}

// Random non-empty subset of the l bit positions.
inline seccrit::KeySubset random_subset(int key_length, std::mt19937_64& rng) {
  std::vector<int> positions;
  while (positions.empty()) {
    for (int i = 0; i < key_length; ++i) {
      if (rng() & 1u) positions.push_back(i);
    }
  }
  return seccrit::KeySubset(std::move(positions));
}

// Independent marginal oracle: arithmetic on key indices instead of the
// kernel's bit machinery, plain accumulation.
inline std::vector<double> brute_marginal(const seccrit::KeyDistribution& p,
                                          std::vector<int> positions) {
  const int l = p.key_length();
  const std::size_t m = positions.size();
  std::vector<double> out(std::size_t{1} << m, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t v = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t divisor = std::size_t{1} << (l - 1 - positions[j]);
      v = 2 * v + (k / divisor) % 2;
    }
    out[v] += p.prob(k);
  }
  return out;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("seccrit_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace testutil

#endif  // SECCRIT_TESTS_HELPERS_HPP
