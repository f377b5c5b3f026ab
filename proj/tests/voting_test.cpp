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


#include <gtest/gtest.h>

#include "mlottery.hpp"
#include "test_support.hpp"

namespace mlottery {
namespace {

using testing::majority_profile;
using testing::cycle_profile;

constexpr AltIndex R = 0, G = 1, B = 2;

TEST(Borda, MajorityWinCounts) {
  const auto s = borda_scores(pairwise_counts(majority_profile()));
  EXPECT_EQ(s.scores, (std::vector<Weight>{Weight(7), Weight(2), Weight(6)}));
  const auto normalized = borda_scores(pairwise_counts(majority_profile()), true);
  EXPECT_TRUE(normalized.normalized);
  EXPECT_EQ(normalized.scores[R], Weight(7, 5));
}

TEST(Borda, CycleTiesAndIndifference) {
  EXPECT_EQ(borda_scores(pairwise_counts(cycle_profile())).scores,
            (std::vector<Weight>(3, Weight(3))));
  Matrix<Weight> e(3, 3, Weight(2));
  for (int i = 0; i < 3; ++i) e(i, i) = Weight(0);
  const auto c = PairwiseCounts::complete(testing::rgb(), Matrix<Weight>(3, 3, Weight(0)), e, Weight(2));
  EXPECT_EQ(borda_scores(c).scores, (std::vector<Weight>(3, Weight(0))));
}

TEST(Borda, ScoresSumToStrictComparisonsAndFollowRelabeling) {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + rng.below(5);
    const auto profile = testing::random_profile(rng, m, 1 + rng.below(15));
    const auto scores = borda_scores(pairwise_counts(profile)).scores;
    Weight sum(0), strict(0);
    for (const auto& s : scores) sum += s;
    const auto counts = pairwise_counts(profile);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) strict += counts.n(a, b);
    }
    EXPECT_EQ(sum, strict);

    // Relabel alternative i as perm[i] everywhere.
    const auto perm = testing::random_permutation(rng, m);
    std::vector<RankingGroup> groups;
    for (const auto& g : profile.groups()) {
      RankingGroup h{{}, g.weight};
      for (AltIndex a : g.ranking) h.ranking.push_back(perm[a]);
      groups.push_back(h);
    }
    const auto relabeled =
        borda_scores(pairwise_counts(PreferenceProfile(profile.alternatives(), groups))).scores;
    for (std::size_t a = 0; a < m; ++a) EXPECT_EQ(relabeled[perm[a]], scores[a]);
  }
}

TEST(MajorityWinner, Examples) {
  EXPECT_EQ(majority_winner(majority_profile()), B);
  EXPECT_FALSE(majority_winner(cycle_profile()));
  EXPECT_EQ(majority_winner(testing::two_color_profile()), 1u);
}

TEST(MajorityWinner, EvenSplitQualifiesBothAndIsFlagged) {
  const auto p = PreferenceProfile::from_labels(
      testing::rgb(), {{{"G", "R", "B"}, Weight(1)}, {{"R", "G", "B"}, Weight(1)}});
  EXPECT_EQ(majority_winners(p), (std::vector<AltIndex>{R, G}));
  EXPECT_EQ(majority_winner(p), R);
  EXPECT_FALSE(condorcet_winner(pairwise_counts(p)));
}

TEST(CondorcetWinner, Examples) {
  EXPECT_EQ(condorcet_winner(pairwise_counts(majority_profile())), B);
  EXPECT_FALSE(condorcet_winner(pairwise_counts(cycle_profile())));
  Matrix<Weight> n{{Weight(0), Weight(3)}, {Weight(2), Weight(0)}};
  const auto c = PairwiseCounts::complete(AlternativeSet({"a", "b"}), n,
                                          Matrix<Weight>(2, 2, Weight(0)), Weight(5));
  EXPECT_EQ(condorcet_winner(c), 0u);
}

// With an odd population "at least half" is a strict majority, and a strict
// majority winner beats everyone head to head.
TEST(MajorityWinner, ImpliesCondorcetWinnerForOddPopulations) {
  SplitMix64 rng(73);
  int seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto profile = testing::random_profile(rng, 2 + rng.below(4), 2 * rng.below(5) + 1);
    const auto w = majority_winner(profile);
    if (!w) continue;
    ++seen;
    EXPECT_EQ(condorcet_winner(pairwise_counts(profile)), w);
  }
  EXPECT_GT(seen, 100);
}

TEST(SmithSet, Examples) {
  EXPECT_EQ(smith_set(pairwise_counts(majority_profile())), std::vector<AltIndex>{B});
  EXPECT_EQ(smith_set(pairwise_counts(cycle_profile())), (std::vector<AltIndex>{R, G, B}));
  EXPECT_EQ(smith_set(pairwise_counts(testing::two_color_profile())), std::vector<AltIndex>{1});
}

TEST(SmithSet, MatchesBruteForceIncludingTies) {
  SplitMix64 rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + rng.below(6);
    // Even populations produce pairwise ties.
    const auto counts = pairwise_counts(testing::random_profile(rng, m, 1 + rng.below(10)));
    const auto smith = smith_set(counts);
    EXPECT_EQ(smith, testing::brute_force_smith(counts));
    if (const auto cw = condorcet_winner(counts)) {
      EXPECT_EQ(smith, std::vector<AltIndex>{*cw});
    }
  }
}

TEST(RandomDictatorship, Examples) {
  const auto p = random_dictatorship(majority_profile());
  EXPECT_DOUBLE_EQ(p[R], 0.4);
  EXPECT_DOUBLE_EQ(p[G], 0.0);
  EXPECT_DOUBLE_EQ(p[B], 0.6);
  const auto single = PreferenceProfile::from_labels(testing::rgb(), {{{"G", "B", "R"}, Weight(4)}});
  EXPECT_DOUBLE_EQ(random_dictatorship(single)[G], 1.0);
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_NEAR(random_dictatorship(cycle_profile())[a], 1.0 / 3.0, 1e-15);
  }
}

TEST(RandomDictatorship, InvariantToSplittingGroups) {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const auto profile = testing::random_profile(rng, 2 + rng.below(4), 1 + rng.below(8));
    std::vector<RankingGroup> split;
    for (const auto& g : profile.groups()) {
      split.push_back({g.ranking, g.weight / 2});
      split.push_back({g.ranking, g.weight / 2});
    }
    const auto a = random_dictatorship(profile);
    const auto b = random_dictatorship(PreferenceProfile(profile.alternatives(), split));
    EXPECT_LE(linf_distance(a, b), 1e-15);
    double sum = 0;
    for (double x : a.probabilities()) sum += x;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace mlottery
