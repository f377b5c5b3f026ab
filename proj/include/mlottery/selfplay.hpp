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

// Tabular self-play preference optimization. A policy samples k alternatives,
// each sample is rewarded with its average selection probability against the
// other samples, and the policy moves toward samples that beat their peers.
// The uniform mixture of the iterates approaches the maximal lottery.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mlottery/lottery.hpp"
#include "mlottery/pairwise.hpp"
#include "mlottery/rng.hpp"

namespace mlottery {

/// Softmax policy over logits.
class TabularPolicy {
 public:
  explicit TabularPolicy(AlternativeSet alternatives)
      : alternatives_(std::move(alternatives)), logits_(alternatives_.size(), 0.0) {}

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::span<const double> logits() const { return logits_; }

  void nudge(AltIndex a, double delta) { logits_[a] += delta; }

  Lottery lottery() const {
    const double top = *std::max_element(logits_.begin(), logits_.end());
    std::vector<double> mass(logits_.size());
    for (std::size_t a = 0; a < mass.size(); ++a) mass[a] = std::exp(logits_[a] - top);
    return Lottery::from_masses(alternatives_, std::move(mass));
  }

 private:
  AlternativeSet alternatives_;
  std::vector<double> logits_;
};

struct TraceRow {
  std::size_t iteration = 0;  // 1-based
  std::vector<double> policy;
  std::vector<double> mixture;  // uniform average of policies 1..iteration
  std::vector<double> expected_reward;
};

struct SelfPlayTrace {
  std::uint64_t seed = 0;
  std::vector<TraceRow> rows;
};

/// r_i = 1/(k−1) Σ_{j≠i} P̃(a_i ≻ a_j). Duplicates compare at P̃(a,a) = ½.
inline std::vector<double> spo_reward(std::span<const AltIndex> samples,
                                      const SelectionMatrix& preference) {
  const std::size_t k = samples.size();
  if (k < 2) throw std::invalid_argument("spo_reward: need at least two samples");
  for (AltIndex a : samples) {
    if (a >= preference.size()) throw std::invalid_argument("spo_reward: index out of range");
  }
  std::vector<double> out(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) out[i] += preference(samples[i], samples[j]);
    }
    out[i] /= static_cast<double>(k - 1);
  }
  return out;
}

struct SpoConfig {
  std::size_t k = 2;
  std::size_t iterations = 2000;
  double step_size = 1.0;
  std::uint64_t seed = 0;
  std::size_t batch = 128;
  // Fraction of the samples in each batch drawn uniformly instead of from the
  // policy.
  double exploration = 0.1;
  std::size_t log_stride = 1;
};

namespace detail {

inline AltIndex draw(SplitMix64& rng, std::span<const double> p) {
  const double u = rng.uniform();
  double acc = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    acc += p[a];
    if (u < acc) return a;
  }
  // Rounding left u above the last partial sum; take the last supported entry.
  for (std::size_t a = p.size(); a-- > 0;) {
    if (p[a] > 0.0) return a;
  }
  return 0;
}

}  // namespace detail

/// Runs the self-play loop. Per iteration: draw `batch` groups of k samples
/// (round(exploration·batch·k) of them uniformly, the rest from the current
/// policy), score them with spo_reward, and update
///
///     logit(a) += step_size · (mean reward of a's samples − batch mean reward)
///
/// for every sampled a. Iteration t reads RNG substream t of `seed`. Returns
/// the uniform mixture of the policies used at iterations 1..T.
inline std::pair<Lottery, SelfPlayTrace> spo_run(const SelectionMatrix& preference,
                                                 const SpoConfig& config) {
  if (config.k < 2) throw std::invalid_argument("spo_run: k must be at least 2");
  if (config.iterations == 0) throw std::invalid_argument("spo_run: iterations must be positive");
  if (config.batch == 0) throw std::invalid_argument("spo_run: batch must be positive");
  if (!(config.exploration >= 0.0 && config.exploration <= 1.0)) {
    throw std::invalid_argument("spo_run: exploration must be in [0, 1]");
  }
  if (!std::isfinite(config.step_size)) throw std::invalid_argument("spo_run: bad step size");

  const std::size_t m = preference.size();
  const std::size_t slots = config.batch * config.k;
  const auto uniform_slots =
      static_cast<std::size_t>(std::llround(config.exploration * static_cast<double>(slots)));
  const std::vector<double> uniform(m, 1.0 / static_cast<double>(m));
  const std::size_t stride = std::max<std::size_t>(config.log_stride, 1);

  TabularPolicy policy(preference.alternatives());
  std::vector<double> mixture(m, 0.0);
  SelfPlayTrace trace{config.seed, {}};
  std::vector<AltIndex> samples(slots);
  std::vector<bool> explore(slots);

  for (std::size_t t = 1; t <= config.iterations; ++t) {
    const Lottery current = policy.lottery();
    for (std::size_t a = 0; a < m; ++a) {
      mixture[a] += (current[a] - mixture[a]) / static_cast<double>(t);
    }

    SplitMix64 rng = substream(config.seed, t);
    // Exactly uniform_slots samples come from the uniform distribution, at
    // random positions, so explored samples are scored against policy samples.
    std::fill(explore.begin(), explore.end(), false);
    std::fill(explore.begin(), explore.begin() + static_cast<std::ptrdiff_t>(uniform_slots), true);
    for (std::size_t i = slots; i > 1; --i) {
      std::swap(explore[i - 1], explore[rng.below(i)]);
    }
    for (std::size_t i = 0; i < slots; ++i) {
      samples[i] = detail::draw(rng, explore[i] ? std::span<const double>(uniform)
                                                : current.probabilities());
    }

    std::vector<double> reward_sum(m, 0.0);
    std::vector<std::size_t> reward_count(m, 0);
    double total = 0.0;
    for (std::size_t g = 0; g < config.batch; ++g) {
      std::span<const AltIndex> group(samples.data() + g * config.k, config.k);
      const auto rewards = spo_reward(group, preference);
      for (std::size_t i = 0; i < config.k; ++i) {
        reward_sum[group[i]] += rewards[i];
        ++reward_count[group[i]];
        total += rewards[i];
      }
    }
    const double baseline = total / static_cast<double>(config.batch * config.k);
    std::vector<double> estimate(m, baseline);
    for (std::size_t a = 0; a < m; ++a) {
      if (reward_count[a] == 0) continue;
      estimate[a] = reward_sum[a] / static_cast<double>(reward_count[a]);
      policy.nudge(a, config.step_size * (estimate[a] - baseline));
    }

    if (t % stride == 0 || t == config.iterations || t == 1) {
      trace.rows.push_back({t, std::vector<double>(current.probabilities().begin(),
                                                   current.probabilities().end()),
                            mixture, std::move(estimate)});
    }
  }
  return {Lottery::from_masses(preference.alternatives(), mixture), std::move(trace)};
}

/// Noise-free counterpart of spo_run: the same logit update with the batch
/// estimate replaced by the exact expected reward (P̃π)(a) against the current
/// policy, step rate·sqrt(ln m / t). Returns the averaged policy.
inline Lottery exact_best_response_dynamics(const SelectionMatrix& preference,
                                            std::size_t iterations, double rate = 8.0) {
  if (iterations == 0) throw std::invalid_argument("exact_best_response_dynamics: zero iterations");
  const std::size_t m = preference.size();
  const double log_m = std::log(static_cast<double>(m));
  TabularPolicy policy(preference.alternatives());
  std::vector<double> average(m, 0.0);
  for (std::size_t t = 1; t <= iterations; ++t) {
    const Lottery current = policy.lottery();
    for (std::size_t a = 0; a < m; ++a) {
      average[a] += (current[a] - average[a]) / static_cast<double>(t);
    }
    const auto expected = times_col(preference.probabilities(), current.probabilities());
    double baseline = 0.0;
    for (std::size_t a = 0; a < m; ++a) baseline += current[a] * expected[a];
    const double step = rate * std::sqrt(log_m / static_cast<double>(t));
    for (std::size_t a = 0; a < m; ++a) policy.nudge(a, step * (expected[a] - baseline));
  }
  return Lottery::from_masses(preference.alternatives(), std::move(average));
}

}  // namespace mlottery
