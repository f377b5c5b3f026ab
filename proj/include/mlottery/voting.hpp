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

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "mlottery/lottery.hpp"
#include "mlottery/pairwise.hpp"
#include "mlottery/profile.hpp"
#include "mlottery/weight.hpp"

namespace mlottery {

struct BordaScores {
  std::vector<Weight> scores;
  bool normalized = false;
};

/// score(a) = Σ_{b≠a} N(a,b): pairwise wins. Normalized scores divide by n.
inline BordaScores borda_scores(const PairwiseCounts& counts, bool normalized = false) {
  const std::size_t m = counts.size();
  BordaScores out{std::vector<Weight>(m, Weight(0)), normalized};
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) out.scores[a] += counts.n(a, b);
    }
    if (normalized) out.scores[a] /= counts.total_weight();
  }
  return out;
}

/// Every alternative ranked first by at least half the population. Two can
/// qualify on an exact even split.
inline std::vector<AltIndex> majority_winners(const PreferenceProfile& profile) {
  std::vector<Weight> firsts(profile.size(), Weight(0));
  for (const auto& g : profile.groups()) firsts[g.ranking.front()] += g.weight;
  std::vector<AltIndex> out;
  for (std::size_t a = 0; a < firsts.size(); ++a) {
    if (firsts[a] * 2 >= profile.total_weight()) out.push_back(a);
  }
  return out;
}

// First qualifying alternative by index.
inline std::optional<AltIndex> majority_winner(const PreferenceProfile& profile) {
  auto winners = majority_winners(profile);
  if (winners.empty()) return std::nullopt;
  return winners.front();
}

inline bool beats(const PairwiseCounts& counts, AltIndex a, AltIndex b) {
  return counts.n(a, b) > counts.n(b, a);
}

inline std::optional<AltIndex> condorcet_winner(const PairwiseCounts& counts) {
  const std::size_t m = counts.size();
  for (std::size_t a = 0; a < m; ++a) {
    bool all = true;
    for (std::size_t b = 0; b < m && all; ++b) {
      if (a != b && !beats(counts, a, b)) all = false;
    }
    if (all) return a;
  }
  return std::nullopt;
}

/// Smallest nonempty set whose members all strictly beat every outsider.
///
/// Members of a dominant set have strictly more pairwise wins than outsiders
/// (a member beats at least every outsider; an outsider beats at most the
/// other outsiders), so every dominant set is a prefix of the alternatives
/// sorted by win count. Dominant sets are nested, so the first dominant prefix
/// is the Smith set. Returned in index order.
inline std::vector<AltIndex> smith_set(const PairwiseCounts& counts) {
  const std::size_t m = counts.size();
  std::vector<std::size_t> wins(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && beats(counts, a, b)) ++wins[a];
    }
  }
  std::vector<AltIndex> order(m);
  std::iota(order.begin(), order.end(), AltIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](AltIndex x, AltIndex y) { return wins[x] > wins[y]; });

  for (std::size_t k = 1; k <= m; ++k) {
    bool dominant = true;
    for (std::size_t i = 0; i < k && dominant; ++i) {
      for (std::size_t j = k; j < m && dominant; ++j) {
        dominant = beats(counts, order[i], order[j]);
      }
    }
    if (dominant) {
      std::vector<AltIndex> out(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return order;  // unreachable: the full set is trivially dominant
}

/// π(a) = share of the population ranking a first.
inline Lottery random_dictatorship(const PreferenceProfile& profile) {
  std::vector<Weight> firsts(profile.size(), Weight(0));
  for (const auto& g : profile.groups()) firsts[g.ranking.front()] += g.weight;
  std::vector<double> p(profile.size());
  for (std::size_t a = 0; a < p.size(); ++a) p[a] = to_double(firsts[a] / profile.total_weight());
  return Lottery(profile.alternatives(), std::move(p));
}

}  // namespace mlottery
