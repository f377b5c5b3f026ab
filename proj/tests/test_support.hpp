// Copyright 2026 The mlottery Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Fixtures and independent oracles shared by the unit tests and the
// acceptance runner.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mlottery.hpp"

namespace mlottery::testing {

inline AlternativeSet rgb() { return AlternativeSet({"R", "G", "B"}); }

// 2×(R≻G≻B), 3×(B≻R≻G).
inline PreferenceProfile majority_profile() {
  return PreferenceProfile::from_labels(rgb(), {{{"R", "G", "B"}, Weight(2)},
                                               {{"B", "R", "G"}, Weight(3)}});
}

// One voter each: R≻B≻G, G≻R≻B, B≻G≻R.
inline PreferenceProfile cycle_profile() {
  return PreferenceProfile::from_labels(rgb(), {{{"R", "B", "G"}, Weight(1)},
                                               {{"G", "R", "B"}, Weight(1)},
                                               {{"B", "G", "R"}, Weight(1)}});
}

inline PreferenceProfile two_color_profile() {
  AlternativeSet rb({"R", "B"});
  return PreferenceProfile::from_labels(rb, {{{"R", "B"}, Weight(2)}, {{"B", "R"}, Weight(3)}});
}

inline PreferenceProfile three_color_profile() { return majority_profile(); }

inline AlternativeSet letters(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return AlternativeSet(labels);
}

inline std::vector<AltIndex> random_permutation(SplitMix64& rng, std::size_t m) {
  std::vector<AltIndex> p(m);
  std::iota(p.begin(), p.end(), AltIndex{0});
  for (std::size_t i = m; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

// n voters with independent uniformly random strict rankings.
inline PreferenceProfile random_profile(SplitMix64& rng, std::size_t m, std::size_t n) {
  std::vector<RankingGroup> groups;
  for (std::size_t v = 0; v < n; ++v) groups.push_back({random_permutation(rng, m), Weight(1)});
  return PreferenceProfile(letters(m), std::move(groups));
}

// n voters with random weak orders: each voter puts every alternative in one of
// `tiers` levels, equal levels meaning indifference.
inline PairwiseCounts random_weak_counts(SplitMix64& rng, std::size_t m, std::size_t n,
                                         std::size_t tiers) {
  Matrix<Weight> strict(m, m, Weight(0)), indifferent(m, m, Weight(0));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint64_t> level(m);
    for (auto& l : level) l = rng.below(tiers);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        if (level[a] < level[b]) strict(a, b) += 1;
        if (level[a] == level[b]) indifferent(a, b) += 1;
      }
    }
  }
  return PairwiseCounts::complete(letters(m), std::move(strict), std::move(indifferent),
                                  Weight(static_cast<std::int64_t>(n)));
}

// Smallest nonempty set every member of which beats every outsider, by
// enumeration of all subsets.
inline std::vector<AltIndex> brute_force_smith(const PairwiseCounts& counts) {
  const std::size_t m = counts.size();
  std::uint32_t best = (1u << m) - 1;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    bool dominant = true;
    for (std::size_t i = 0; i < m && dominant; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < m && dominant; ++j) {
        if (mask >> j & 1u) continue;
        dominant = counts.n(i, j) > counts.n(j, i);
      }
    }
    if (dominant && __builtin_popcount(mask) < __builtin_popcount(best)) best = mask;
  }
  std::vector<AltIndex> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (best >> i & 1u) out.push_back(i);
  }
  return out;
}

// Exhaustive search over a simplex grid of step 1/steps for the 3-alternative
// lottery maximizing the worst column payoff.
inline std::vector<double> grid_search_maximin3(const MatrixD& margins, int steps) {
  std::vector<double> best;
  double best_value = -1e300;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; i + j <= steps; ++j) {
      const std::vector<double> p{double(i) / steps, double(j) / steps,
                                  double(steps - i - j) / steps};
      const auto cols = row_times(p, margins);
      const double worst = *std::min_element(cols.begin(), cols.end());
      if (worst > best_value + 1e-15) {
        best_value = worst;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace mlottery::testing
