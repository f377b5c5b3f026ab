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

// Bradley–Terry reward fitting with one reward per alternative, and the
// softmax policy that reward-maximizing training converges to.
//
// With every pair judged by the same population the BTL maximum-likelihood
// rewards satisfy, for each a,
//
//     Σ_{b≠a} σ(r(a) − r(b)) = Σ_{b≠a} N(a,b)/n  (normalized Borda score),
//
// and the left side is strictly increasing in r(a), so fitted rewards order
// the alternatives exactly as Borda does.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mlottery/lottery.hpp"
#include "mlottery/pairwise.hpp"
#include "mlottery/voting.hpp"

namespace mlottery {

inline constexpr double kRewardCap = 30.0;

/// One reward per alternative, gauge-fixed to mean zero.
struct RewardVector {
  AlternativeSet alternatives;
  std::vector<double> values;

  double operator[](AltIndex a) const { return values[a]; }
};

struct FitDiagnostics {
  double final_gradient_norm = 0.0;  // ∞-norm
  std::size_t iterations_used = 0;
  bool converged = false;
  bool capped = false;  // some reward sits on ±kRewardCap
  double loss = 0.0;
};

struct BtlFitOptions {
  double learning_rate = 1.0;  // initial step for the backtracking search
  std::size_t max_iterations = 200000;
  double tolerance = 1e-8;
};

namespace detail {

inline double log_sigmoid(double x) {
  return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// Effective win weights N + E/2: ties count half a win each way.
inline MatrixD effective_wins(const PairwiseCounts& counts) {
  const std::size_t m = counts.size();
  MatrixD w(m, m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) w(a, b) = to_double(counts.n(a, b) + counts.e(a, b) / 2);
    }
  }
  return w;
}

inline void require_finite(std::span<const double> r, std::size_t m) {
  if (r.size() != m) throw std::invalid_argument("btl: reward size mismatch");
  for (double x : r) {
    if (!std::isfinite(x)) throw std::invalid_argument("btl: non-finite reward");
  }
}

inline double loss(std::span<const double> r, const MatrixD& wins) {
  double total = 0.0;
  for (std::size_t a = 0; a < wins.rows(); ++a) {
    for (std::size_t b = 0; b < wins.cols(); ++b) {
      if (a != b && wins(a, b) != 0.0) total -= wins(a, b) * log_sigmoid(r[a] - r[b]);
    }
  }
  return total;
}

inline std::vector<double> gradient(std::span<const double> r, const MatrixD& wins) {
  const std::size_t m = wins.rows();
  std::vector<double> g(m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const double pair = wins(a, b) + wins(b, a);
      if (pair == 0.0) continue;
      g[a] += pair * sigmoid(r[a] - r[b]) - wins(a, b);
    }
  }
  return g;
}

// Euclidean projection onto {Σr = 0} ∩ [-cap, cap]^m: clamp(r - c) with the
// shift c found by bisection.
inline void project_gauge(std::vector<double>& r, double cap) {
  auto excess = [&](double c) {
    double s = 0.0;
    for (double x : r) s += std::clamp(x - c, -cap, cap);
    return s;
  };
  double lo = *std::min_element(r.begin(), r.end()) - cap;
  double hi = *std::max_element(r.begin(), r.end()) + cap;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  const double c = 0.5 * (lo + hi);
  for (double& x : r) x = std::clamp(x - c, -cap, cap);
}

}  // namespace detail

/// L(r) = −Σ_{a≠b} N(a,b) log σ(r(a) − r(b)).
inline double btl_loss(const RewardVector& rewards, const PairwiseCounts& counts) {
  detail::require_finite(rewards.values, counts.size());
  return detail::loss(rewards.values, detail::effective_wins(counts));
}

/// ∂L/∂r(a) = Σ_{b≠a} n_ab (σ(r(a) − r(b)) − p̂(a,b)).
inline std::vector<double> btl_gradient(const RewardVector& rewards, const PairwiseCounts& counts) {
  detail::require_finite(rewards.values, counts.size());
  return detail::gradient(rewards.values, detail::effective_wins(counts));
}

namespace detail {

// The likelihood has a finite maximizer iff every observed win a→b lies on a
// directed cycle of wins, i.e. b also reaches a.
inline bool mle_exists(const MatrixD& wins) {
  const std::size_t m = wins.rows();
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    reach[a][a] = true;
    for (std::size_t b = 0; b < m; ++b) reach[a][b] = reach[a][b] || wins(a, b) > 0.0;
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) reach[a][b] = reach[a][b] || (reach[a][k] && reach[k][b]);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (wins(a, b) > 0.0 && !reach[b][a]) return false;
    }
  }
  return true;
}

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace detail

/// Gradient descent with backtracking, projected onto the mean-zero gauge and
/// the ±30 reward box.
///
/// A step r → r' is accepted when L(r') ≤ L(r) − ½ g·(r − r') (Armijo), or when
/// g'·(r − r') ≥ ½ g·(r − r') with g' the gradient at r'. By convexity the
/// second test implies the first; it stays reliable near the optimum where the
/// loss difference drowns in round-off.
///
/// When some observed win is not on a cycle of wins (e.g. a unanimous pair that
/// nothing else pins down) the likelihood has no maximizer. The fit then
/// ignores the tolerance, runs until the rewards are pinned on the box, and
/// reports capped = true, converged = false.
inline std::pair<RewardVector, FitDiagnostics> fit_btl(const PairwiseCounts& counts,
                                                       const BtlFitOptions& options = {}) {
  const std::size_t m = counts.size();
  const MatrixD wins = detail::effective_wins(counts);
  bool any = false;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) any = any || wins(a, b) > 0.0;
  }
  if (!any) throw std::invalid_argument("fit_btl: no comparisons to fit");
  const bool finite_optimum = detail::mle_exists(wins);

  std::vector<double> r(m, 0.0);
  double current = detail::loss(r, wins);
  double step = options.learning_rate;
  FitDiagnostics diag;
  std::vector<double> g = detail::gradient(r, wins);
  auto inf_norm = [](const std::vector<double>& v) {
    double n = 0.0;
    for (double x : v) n = std::max(n, std::abs(x));
    return n;
  };

  std::size_t it = 0;
  for (; it < options.max_iterations; ++it) {
    if (finite_optimum && inf_norm(g) <= options.tolerance) break;
    std::vector<double> trial(m), trial_g, delta(m);
    double trial_loss = 0.0;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      for (std::size_t a = 0; a < m; ++a) trial[a] = r[a] - step * g[a];
      detail::project_gauge(trial, kRewardCap);
      for (std::size_t a = 0; a < m; ++a) delta[a] = r[a] - trial[a];
      trial_loss = detail::loss(trial, wins);
      trial_g = detail::gradient(trial, wins);
      const double decrease = detail::dot(g, delta);
      if (trial_loss <= current - 0.5 * decrease || detail::dot(trial_g, delta) >= 0.5 * decrease) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || trial == r) break;  // pinned against the box
    r = std::move(trial);
    current = trial_loss;
    g = std::move(trial_g);
    step *= 2.0;
  }

  diag.iterations_used = it;
  diag.final_gradient_norm = inf_norm(g);
  diag.converged = finite_optimum && diag.final_gradient_norm <= options.tolerance;
  diag.loss = current;
  for (double x : r) diag.capped = diag.capped || std::abs(x) >= kRewardCap - 1e-9;
  return {RewardVector{counts.alternatives(), std::move(r)}, diag};
}

/// True iff fitted rewards order every pair the way raw Borda scores do; pairs
/// with equal Borda scores must have rewards within 1e-6.
inline bool check_borda_equivalence(const RewardVector& rewards, const PairwiseCounts& counts) {
  const auto borda = borda_scores(counts);
  const std::size_t m = counts.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Weight diff = borda.scores[a] - borda.scores[b];
      const double dr = rewards[a] - rewards[b];
      if (diff == Weight(0)) {
        if (std::abs(dr) > 1e-6) return false;
      } else if ((diff > Weight(0)) != (dr > 0.0) || dr == 0.0) {
        return false;
      }
    }
  }
  return true;
}

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// π(a) ∝ exp(β r(a)). β = ∞ is the point mass on the best reward, split
/// uniformly over rewards within 1e-12 of the best.
inline Lottery softmax_policy(const RewardVector& rewards, double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("softmax_policy: beta must be nonnegative");
  detail::require_finite(rewards.values, rewards.alternatives.size());
  const double top = *std::max_element(rewards.values.begin(), rewards.values.end());
  std::vector<double> mass(rewards.values.size());
  for (std::size_t a = 0; a < mass.size(); ++a) {
    if (std::isinf(beta)) {
      mass[a] = top - rewards.values[a] <= 1e-12 ? 1.0 : 0.0;
    } else {
      mass[a] = std::exp(beta * (rewards.values[a] - top));
    }
  }
  return Lottery::from_masses(rewards.alternatives, std::move(mass));
}

}  // namespace mlottery
