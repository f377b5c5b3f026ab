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
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlottery/pairwise.hpp"
#include "mlottery/profile.hpp"
#include "mlottery/rng.hpp"

namespace mlottery {

struct ComparisonRecord {
  std::string prompt_id;
  AltIndex preferred;
  AltIndex rejected;

  friend bool operator==(const ComparisonRecord&, const ComparisonRecord&) = default;
};

/// (prompt, preferred, rejected) triplets over a fixed alternative set.
class ComparisonDataset {
 public:
  ComparisonDataset(AlternativeSet alternatives, std::vector<ComparisonRecord> records,
                    std::uint64_t seed = 0,
                    std::optional<PreferenceProfile> population = std::nullopt)
      : alternatives_(std::move(alternatives)),
        records_(std::move(records)),
        seed_(seed),
        population_(std::move(population)) {
    for (const auto& r : records_) {
      if (r.preferred >= alternatives_.size() || r.rejected >= alternatives_.size()) {
        throw std::invalid_argument("dataset: alternative index out of range");
      }
      if (r.preferred == r.rejected) {
        throw std::invalid_argument("dataset: preferred equals rejected");
      }
    }
  }

  const AlternativeSet& alternatives() const { return alternatives_; }
  const std::vector<ComparisonRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::uint64_t seed() const { return seed_; }
  const std::optional<PreferenceProfile>& population() const { return population_; }

 private:
  AlternativeSet alternatives_;
  std::vector<ComparisonRecord> records_;
  std::uint64_t seed_;
  std::optional<PreferenceProfile> population_;
};

namespace detail {

// Group weights scaled to integers over a common denominator, as a prefix sum.
inline std::vector<std::uint64_t> cumulative_group_weights(const PreferenceProfile& profile) {
  std::int64_t common = 1;
  for (const auto& g : profile.groups()) {
    common = std::lcm(common, g.weight.denominator());
  }
  std::vector<std::uint64_t> cumulative;
  std::uint64_t running = 0;
  for (const auto& g : profile.groups()) {
    running += static_cast<std::uint64_t>(g.weight.numerator() * (common / g.weight.denominator()));
    cumulative.push_back(running);
  }
  return cumulative;
}

}  // namespace detail

/// Draws `size` comparisons from the population. For each record: an unordered
/// pair of distinct alternatives uniformly at random, then one group with
/// probability proportional to its weight, then that group's verdict on the
/// pair. Record i only reads from RNG substream i.
inline ComparisonDataset sample_dataset(const PreferenceProfile& profile, std::size_t size,
                                        std::uint64_t seed, const std::string& prompt_id) {
  if (size == 0) throw std::invalid_argument("sample_dataset: size must be positive");
  const std::size_t m = profile.size();
  const auto cumulative = detail::cumulative_group_weights(profile);
  std::vector<std::vector<std::size_t>> positions;
  positions.reserve(profile.groups().size());
  for (const auto& g : profile.groups()) positions.push_back(ranking_positions(g.ranking));

  std::vector<ComparisonRecord> records;
  records.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    SplitMix64 rng = substream(seed, i);
    // Ordered draw without replacement: the first/second presentation order
    // is itself uniform, so no position carries information.
    const AltIndex first = rng.below(m);
    AltIndex second = rng.below(m - 1);
    if (second >= first) ++second;
    const std::uint64_t ticket = rng.below(cumulative.back());
    const auto group = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), ticket) - cumulative.begin());
    const auto& pos = positions[group];
    if (pos[first] < pos[second]) {
      records.push_back({prompt_id, first, second});
    } else {
      records.push_back({prompt_id, second, first});
    }
  }
  return ComparisonDataset(profile.alternatives(), std::move(records), seed, profile);
}

/// Fraction of {a,b} records that prefer a, with fixed answers for the edge
/// cases: a == b gives 0.5; if the pair never occurs, an alternative that
/// appears somewhere in the data beats one that never does (1.0 / 0.0), and
/// otherwise the answer is 0.5.
inline double empirical_preference(const ComparisonDataset& data, AltIndex a, AltIndex b) {
  const std::size_t m = data.alternatives().size();
  if (a >= m || b >= m) throw std::invalid_argument("empirical_preference: index out of range");
  if (a == b) return 0.5;
  std::size_t wins = 0, total = 0;
  bool a_seen = false, b_seen = false;
  for (const auto& r : data.records()) {
    a_seen = a_seen || r.preferred == a || r.rejected == a;
    b_seen = b_seen || r.preferred == b || r.rejected == b;
    if ((r.preferred == a && r.rejected == b) || (r.preferred == b && r.rejected == a)) {
      ++total;
      if (r.preferred == a) ++wins;
    }
  }
  if (total > 0) return static_cast<double>(wins) / static_cast<double>(total);
  if (a_seen != b_seen) return a_seen ? 1.0 : 0.0;
  return 0.5;
}

/// N(a,b) = records preferring a over b; pair totals are per-pair record counts.
inline PairwiseCounts empirical_counts(const ComparisonDataset& data) {
  if (data.empty()) throw std::invalid_argument("empirical_counts: empty dataset");
  const std::size_t m = data.alternatives().size();
  Matrix<Weight> strict(m, m, Weight(0));
  Matrix<Weight> totals(m, m, Weight(0));
  for (const auto& r : data.records()) {
    strict(r.preferred, r.rejected) += 1;
    totals(r.preferred, r.rejected) += 1;
    totals(r.rejected, r.preferred) += 1;
  }
  return PairwiseCounts(data.alternatives(), std::move(strict), Matrix<Weight>(m, m, Weight(0)),
                        std::move(totals), Weight(static_cast<std::int64_t>(data.size())));
}

}  // namespace mlottery
