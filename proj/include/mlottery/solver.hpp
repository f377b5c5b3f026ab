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

// Maximal lotteries: optimal strategies of the symmetric zero-sum game whose
// payoff is the margin matrix. A lottery p is maximal iff pᵀM ≥ 0 entrywise.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mlottery/lottery.hpp"
#include "mlottery/matrix.hpp"
#include "mlottery/pairwise.hpp"
#include "mlottery/simplex.hpp"

namespace mlottery {

inline constexpr double kExactEpsilon = 1e-9;
inline constexpr double kIterativeEpsilon = 1e-3;

struct GameSolution {
  std::vector<double> strategy;  // maximizing row player
  double value = 0.0;
};

/// Optimal row strategy of the zero-sum game with the given payoff (row player
/// maximizes xᵀA y). The payoff is shifted to be ≥ 1 so that the column
/// player's LP  max 1ᵀy s.t. A'y ≤ 1, y ≥ 0  starts feasible at the slack
/// basis; the row strategy is its dual, normalized.
inline GameSolution solve_zero_sum_game(const MatrixD& payoff) {
  const std::size_t rows = payoff.rows();
  const std::size_t cols = payoff.cols();
  if (rows == 0 || cols == 0) throw std::invalid_argument("game: empty payoff");
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!std::isfinite(payoff(r, c))) throw std::invalid_argument("game: non-finite payoff");
      lowest = std::min(lowest, payoff(r, c));
    }
  }
  const double shift = 1.0 - lowest;
  const MatrixD shifted = payoff.map([shift](double x) { return x + shift; });

  const SimplexResult lp = simplex_maximize(shifted, std::vector<double>(rows, 1.0),
                                            std::vector<double>(cols, 1.0));
  if (!(lp.objective > 0.0)) throw NumericError("game: degenerate LP objective");

  GameSolution out;
  out.strategy.resize(rows);
  double sum = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    out.strategy[r] = std::max(lp.dual[r], 0.0);
    sum += out.strategy[r];
  }
  if (!(sum > 0.0)) throw NumericError("game: dual solution vanished");
  for (double& x : out.strategy) x /= sum;
  out.value = 1.0 / lp.objective - shift;
  return out;
}

namespace detail {

inline void require_antisymmetric(const MatrixD& m, double tol) {
  if (!m.square()) throw std::invalid_argument("margin payoff must be square");
  for (std::size_t a = 0; a < m.rows(); ++a) {
    for (std::size_t b = 0; b < m.cols(); ++b) {
      if (std::abs(m(a, b) + m(b, a)) > tol) {
        throw std::invalid_argument("margin payoff is not antisymmetric");
      }
    }
  }
}

}  // namespace detail

/// Exact path on a floating point margin payoff (e.g. M/n or 2P̃ - J).
inline Lottery maximal_lottery_lp(const AlternativeSet& alternatives, const MatrixD& margins) {
  if (margins.rows() != alternatives.size()) {
    throw std::invalid_argument("maximal_lottery_lp: dimension mismatch");
  }
  detail::require_antisymmetric(margins, 1e-12);
  return Lottery(alternatives, solve_zero_sum_game(margins).strategy);
}

inline Lottery maximal_lottery_lp(const MarginMatrix& margin) {
  return maximal_lottery_lp(margin.alternatives(), margin.to_double());
}

struct MaximalityReport {
  double worst_column_payoff = 0.0;  // min_j (pᵀM)_j
  bool is_maximal = false;
  double epsilon = 0.0;
  double game_value = 0.0;  // pᵀMp
};

/// Checks pᵀM e_j ≥ -ε for every pure column j; pure responses suffice since a
/// best response to a fixed lottery can always be taken pure.
inline MaximalityReport verify_maximality(const MatrixD& margins, const Lottery& lottery,
                                          double epsilon = kExactEpsilon) {
  if (!margins.square() || margins.rows() != lottery.size()) {
    throw std::invalid_argument("verify_maximality: dimension mismatch");
  }
  const auto column_payoffs = row_times(lottery.probabilities(), margins);
  MaximalityReport report;
  report.worst_column_payoff = *std::min_element(column_payoffs.begin(), column_payoffs.end());
  report.epsilon = epsilon;
  report.is_maximal = report.worst_column_payoff >= -epsilon;
  report.game_value = bilinear(lottery.probabilities(), margins, lottery.probabilities());
  return report;
}

inline MaximalityReport verify_maximality(const MarginMatrix& margin, const Lottery& lottery,
                                          double epsilon = kExactEpsilon) {
  return verify_maximality(margin.to_double(), lottery, epsilon);
}

/// Solves max_p min_q pᵀP̃q directly on selection probabilities. The value of
/// this game is 1/2 and its optimal strategies are the maximal lotteries,
/// because off the diagonal P̃ - ½J is half the normalized margin matrix.
inline Lottery maximal_lottery_from_selection(const SelectionMatrix& selection) {
  return Lottery(selection.alternatives(),
                 solve_zero_sum_game(selection.probabilities()).strategy);
}

inline double selection_game_value(const SelectionMatrix& selection) {
  return solve_zero_sum_game(selection.probabilities()).value;
}

enum class StepRule { kConstant, kInverseSqrt };

struct StepSchedule {
  StepRule rule = StepRule::kInverseSqrt;
  // η for kConstant; η_t = rate * sqrt(ln m / t) for kInverseSqrt. Payoffs are
  // rescaled to [-1, 1] before the step is applied.
  double rate = 4.0;
};

/// Symmetric multiplicative-weights self-play: one strategy plays against
/// itself, its weights follow the cumulative payoff of each pure strategy, and
/// the time-averaged strategy is returned. Requires a symmetric zero-sum
/// payoff, A + Aᵀ = cJ (margin matrices have c = 0, selection matrices c = 1).
/// Independent cross-check of the LP; exploitability decays like
/// O(sqrt(log m / T)).
inline Lottery maximal_lottery_iterative(const AlternativeSet& alternatives, const MatrixD& payoff,
                                         std::size_t iterations,
                                         const StepSchedule& schedule = {}) {
  if (iterations == 0) throw std::invalid_argument("maximal_lottery_iterative: zero iterations");
  const std::size_t m = alternatives.size();
  if (payoff.rows() != m || payoff.cols() != m) {
    throw std::invalid_argument("maximal_lottery_iterative: dimension mismatch");
  }
  const double constant = payoff(0, 0) * 2.0;
  double scale = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!std::isfinite(payoff(a, b))) {
        throw std::invalid_argument("maximal_lottery_iterative: non-finite payoff");
      }
      scale = std::max(scale, std::abs(payoff(a, b) - 0.5 * constant));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (std::abs(payoff(a, b) + payoff(b, a) - constant) > 1e-9 * std::max(1.0, scale)) {
        throw std::invalid_argument("maximal_lottery_iterative: payoff is not a symmetric zero-sum game");
      }
    }
  }
  if (scale == 0.0) return Lottery::uniform(alternatives);
  const MatrixD game = payoff.map([&](double x) { return (x - 0.5 * constant) / scale; });

  const double log_m = std::log(static_cast<double>(m));
  std::vector<double> cumulative(m, 0.0), average(m, 0.0), current(m, 1.0 / static_cast<double>(m));
  for (std::size_t t = 1; t <= iterations; ++t) {
    const double eta = schedule.rule == StepRule::kConstant
                           ? schedule.rate
                           : schedule.rate * std::sqrt(log_m / static_cast<double>(t));
    const double top = *std::max_element(cumulative.begin(), cumulative.end());
    double z = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      current[a] = std::exp(eta * (cumulative[a] - top));
      z += current[a];
    }
    for (std::size_t a = 0; a < m; ++a) {
      current[a] /= z;
      average[a] += (current[a] - average[a]) / static_cast<double>(t);
    }
    const auto gains = times_col(game, current);
    for (std::size_t a = 0; a < m; ++a) cumulative[a] += gains[a];
  }
  return Lottery::from_masses(alternatives, average);
}

}  // namespace mlottery
