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

SelectionMatrix majority_selection() { return selection_matrix(pairwise_counts(majority_profile())); }
SelectionMatrix cycle_selection() { return selection_matrix(pairwise_counts(cycle_profile())); }
SelectionMatrix two_color_selection() {
  return selection_matrix(pairwise_counts(testing::two_color_profile()));
}

TEST(SpoReward, Examples) {
  const AlternativeSet ab({"a", "b"});
  const SelectionMatrix p(ab, MatrixD{{0.5, 0.6}, {0.4, 0.5}});
  const std::vector<AltIndex> pair{0, 1};
  const auto r = spo_reward(pair, p);
  EXPECT_DOUBLE_EQ(r[0], 0.6);
  EXPECT_DOUBLE_EQ(r[1], 0.4);

  const std::vector<AltIndex> same{1, 1, 1, 1};
  for (double x : spo_reward(same, p)) EXPECT_DOUBLE_EQ(x, 0.5);

  const std::vector<AltIndex> rgb{R, G, B};
  EXPECT_NEAR(spo_reward(rgb, cycle_selection())[0], 0.5, 1e-15);

  const std::vector<AltIndex> one{0};
  EXPECT_THROW(spo_reward(one, p), std::invalid_argument);
}

TEST(SpoReward, RangeAndPairSum) {
  SplitMix64 rng(107);
  const auto sel = selection_matrix(testing::random_weak_counts(rng, 5, 9, 3));
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + rng.below(4);
    std::vector<AltIndex> samples(k);
    for (auto& s : samples) s = rng.below(5);
    const auto r = spo_reward(samples, sel);
    for (double x : r) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
    if (k == 2) {
      EXPECT_NEAR(r[0] + r[1], 1.0, 1e-15);
    }
  }
}

// The reward of a against an opponent drawn from q averages to (P̃q)(a).
TEST(SpoReward, ExpectationMatchesSelectionTimesOpponent) {
  const auto sel = majority_selection();
  const std::vector<double> q{0.2, 0.3, 0.5};
  const auto expected = times_col(sel.probabilities(), q);
  SplitMix64 rng(109);
  constexpr int kBatch = 10000;
  for (AltIndex a = 0; a < 3; ++a) {
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < kBatch; ++i) {
      const std::vector<AltIndex> pair{a, detail::draw(rng, q)};
      const double r = spo_reward(pair, sel)[0];
      sum += r;
      sum_sq += r * r;
    }
    const double mean = sum / kBatch;
    const double var = sum_sq / kBatch - mean * mean;
    EXPECT_LE(std::abs(mean - expected[a]), 3 * std::sqrt(var / kBatch) + 1e-12) << a;
  }
}

TEST(SpoRun, ConvergesOnExperimentMatrices) {
  struct Case {
    SelectionMatrix sel;
    double tv_bound;
  };
  for (std::uint64_t seed : {0, 1, 2}) {
    SpoConfig config;
    config.seed = seed;
    const auto [majority, majority_trace] = spo_run(majority_selection(), config);
    EXPECT_GE(majority[B], 0.95);
    const auto [cyc, cyc_trace] = spo_run(cycle_selection(), config);
    EXPECT_LE(total_variation(cyc, Lottery::uniform(testing::rgb())), 0.05);
    const auto [two, two_trace] = spo_run(two_color_selection(), config);
    EXPECT_GE(two.at("B"), 0.95);
  }
}

TEST(SpoRun, DeterministicAndTraced) {
  SpoConfig config;
  config.iterations = 200;
  config.seed = 5;
  config.log_stride = 50;
  const auto [a, ta] = spo_run(cycle_selection(), config);
  const auto [b, tb] = spo_run(cycle_selection(), config);
  EXPECT_EQ(std::vector<double>(a.probabilities().begin(), a.probabilities().end()),
            std::vector<double>(b.probabilities().begin(), b.probabilities().end()));
  ASSERT_EQ(ta.rows.size(), tb.rows.size());
  std::vector<std::size_t> iterations;
  for (std::size_t i = 0; i < ta.rows.size(); ++i) {
    EXPECT_EQ(ta.rows[i].policy, tb.rows[i].policy);
    EXPECT_EQ(ta.rows[i].mixture, tb.rows[i].mixture);
    iterations.push_back(ta.rows[i].iteration);
  }
  EXPECT_EQ(iterations, (std::vector<std::size_t>{1, 50, 100, 150, 200}));
  for (std::size_t x = 0; x < 3; ++x) EXPECT_NEAR(ta.rows.back().mixture[x], a[x], 1e-15);
  for (const auto& row : ta.rows) {
    double p = 0, q = 0;
    for (std::size_t x = 0; x < 3; ++x) {
      p += row.policy[x];
      q += row.mixture[x];
    }
    EXPECT_NEAR(p, 1.0, 1e-12);
    EXPECT_NEAR(q, 1.0, 1e-12);
  }
  config.seed = 6;
  const auto [c, tc] = spo_run(cycle_selection(), config);
  EXPECT_NE(tc.rows.back().policy, ta.rows.back().policy);
}

TEST(SpoRun, LargerGroups) {
  SpoConfig config;
  config.k = 3;
  const auto [majority, trace] = spo_run(majority_selection(), config);
  EXPECT_GE(majority[B], 0.95);
}

TEST(SpoRun, RejectsBadConfig) {
  SpoConfig config;
  config.k = 1;
  EXPECT_THROW(spo_run(majority_selection(), config), std::invalid_argument);
  config = {};
  config.iterations = 0;
  EXPECT_THROW(spo_run(majority_selection(), config), std::invalid_argument);
  config = {};
  config.batch = 0;
  EXPECT_THROW(spo_run(majority_selection(), config), std::invalid_argument);
  config = {};
  config.exploration = 1.5;
  EXPECT_THROW(spo_run(majority_selection(), config), std::invalid_argument);
}

TEST(ExactDynamics, MatchesLp) {
  const auto majority = exact_best_response_dynamics(majority_selection(), 5000);
  EXPECT_LE(linf_distance(majority, maximal_lottery_from_selection(majority_selection())), 0.01);
  const auto cyc = exact_best_response_dynamics(cycle_selection(), 5000);
  EXPECT_LE(linf_distance(cyc, Lottery::uniform(testing::rgb())), 0.01);
  const auto flat = exact_best_response_dynamics(SelectionMatrix::uniform(testing::rgb()), 100);
  for (std::size_t a = 0; a < 3; ++a) EXPECT_DOUBLE_EQ(flat[a], 1.0 / 3.0);
  EXPECT_THROW(exact_best_response_dynamics(majority_selection(), 0), std::invalid_argument);
}

TEST(ExactDynamics, ExploitabilityShrinks) {
  SplitMix64 rng(113);
  for (const auto& sel : {majority_selection(), cycle_selection(),
                          selection_matrix(testing::random_weak_counts(rng, 5, 11, 5))}) {
    const auto margins = sel.margins();
    const double early = verify_maximality(margins, exact_best_response_dynamics(sel, 500))
                             .worst_column_payoff;
    const double late = verify_maximality(margins, exact_best_response_dynamics(sel, 5000))
                            .worst_column_payoff;
    EXPECT_GE(late, early);
  }
}

TEST(TabularPolicy, SoftmaxOfLogits) {
  TabularPolicy policy(AlternativeSet({"a", "b"}));
  EXPECT_DOUBLE_EQ(policy.lottery()[0], 0.5);
  policy.nudge(0, std::log(3.0));
  EXPECT_NEAR(policy.lottery()[0], 0.75, 1e-15);
  policy.nudge(1, 1000.0);  // stays finite
  EXPECT_NEAR(policy.lottery()[1], 1.0, 1e-15);
}

}  // namespace
}  // namespace mlottery
