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
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlottery/weight.hpp"

namespace mlottery {

using AltIndex = std::size_t;

/// The finite, ordered set of alternatives. Index order is fixed once built and
/// every matrix in the library is laid out in that order.
class AlternativeSet {
 public:
  explicit AlternativeSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (labels_.size() < 2) {
      throw std::invalid_argument("AlternativeSet: need at least 2 alternatives");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) {
        throw std::invalid_argument("AlternativeSet: empty label");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[i] == labels_[j]) {
          throw std::invalid_argument("AlternativeSet: duplicate label '" +
                                      labels_[i] + "'");
        }
      }
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(AltIndex i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<AltIndex> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<AltIndex>(it - labels_.begin());
  }

  AltIndex index(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw std::invalid_argument("unknown alternative '" + label + "'");
  }

  friend bool operator==(const AlternativeSet&, const AlternativeSet&) = default;

 private:
  std::vector<std::string> labels_;
};

struct RankingGroup {
  std::vector<AltIndex> ranking;  // best first
  Weight weight;

  friend bool operator==(const RankingGroup&, const RankingGroup&) = default;
};

/// Weighted strict rankings over an alternative set.
class PreferenceProfile {
 public:
  PreferenceProfile(AlternativeSet alternatives, std::vector<RankingGroup> groups)
      : alternatives_(std::move(alternatives)), groups_(std::move(groups)) {
    const std::size_t m = alternatives_.size();
    if (groups_.empty()) throw std::invalid_argument("profile: no groups");
    for (const auto& g : groups_) {
      if (g.ranking.size() != m) {
        throw std::invalid_argument("profile: ranking does not cover all alternatives");
      }
      std::vector<bool> seen(m, false);
      for (AltIndex a : g.ranking) {
        if (a >= m || seen[a]) {
          throw std::invalid_argument("profile: ranking is not a permutation");
        }
        seen[a] = true;
      }
      if (g.weight < Weight(0)) throw std::invalid_argument("profile: negative weight");
      total_ += g.weight;
    }
    if (total_ <= Weight(0)) throw std::invalid_argument("profile: total weight must be positive");
  }

  // Convenience: rankings given as label lists.
  static PreferenceProfile from_labels(
      const AlternativeSet& alternatives,
      const std::vector<std::pair<std::vector<std::string>, Weight>>& groups) {
    std::vector<RankingGroup> out;
    out.reserve(groups.size());
    for (const auto& [labels, weight] : groups) {
      RankingGroup g{{}, weight};
      for (const auto& l : labels) g.ranking.push_back(alternatives.index(l));
      out.push_back(std::move(g));
    }
    return PreferenceProfile(alternatives, std::move(out));
  }

  const AlternativeSet& alternatives() const { return alternatives_; }
  const std::vector<RankingGroup>& groups() const { return groups_; }
  std::size_t size() const { return alternatives_.size(); }
  const Weight& total_weight() const { return total_; }

  // Every ranking inverted.
  PreferenceProfile reversed() const {
    auto groups = groups_;
    for (auto& g : groups) std::reverse(g.ranking.begin(), g.ranking.end());
    return PreferenceProfile(alternatives_, std::move(groups));
  }

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

 private:
  AlternativeSet alternatives_;
  std::vector<RankingGroup> groups_;
  Weight total_{0};
};

// Position of each alternative within a ranking (0 = top).
inline std::vector<std::size_t> ranking_positions(const std::vector<AltIndex>& ranking) {
  std::vector<std::size_t> pos(ranking.size());
  for (std::size_t r = 0; r < ranking.size(); ++r) pos[ranking[r]] = r;
  return pos;
}

}  // namespace mlottery
