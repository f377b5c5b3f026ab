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

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "mlottery/matrix.hpp"
#include "mlottery/profile.hpp"
#include "mlottery/weight.hpp"

namespace mlottery {

/// Strict-preference counts N and indifference counts E.
///
/// `pair_total(a, b)` is the weight that expressed an opinion on {a, b}:
/// N(a,b) + N(b,a) + E(a,b). Counts from a full profile have every pair total
/// equal to the population weight n. Counts from sampled comparisons carry the
/// number of records per pair instead, and selection probabilities are then
/// normalized per pair.
class PairwiseCounts {
 public:
  PairwiseCounts(AlternativeSet alternatives, Matrix<Weight> strict,
                 Matrix<Weight> indifferent, Matrix<Weight> pair_totals,
                 Weight total_weight)
      : alternatives_(std::move(alternatives)),
        n_(std::move(strict)),
        e_(std::move(indifferent)),
        totals_(std::move(pair_totals)),
        total_(total_weight) {
    const std::size_t m = alternatives_.size();
    auto check_shape = [m](const Matrix<Weight>& x, const char* what) {
      if (x.rows() != m || x.cols() != m) {
        throw std::invalid_argument(std::string("PairwiseCounts: bad shape for ") + what);
      }
    };
    check_shape(n_, "N");
    check_shape(e_, "E");
    check_shape(totals_, "pair totals");
    if (total_ <= Weight(0)) throw std::invalid_argument("PairwiseCounts: total weight must be positive");
    for (std::size_t a = 0; a < m; ++a) {
      if (n_(a, a) != Weight(0) || e_(a, a) != Weight(0) || totals_(a, a) != Weight(0)) {
        throw std::invalid_argument("PairwiseCounts: nonzero diagonal");
      }
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        if (n_(a, b) < Weight(0) || e_(a, b) < Weight(0)) {
          throw std::invalid_argument("PairwiseCounts: negative count");
        }
        if (e_(a, b) != e_(b, a)) {
          throw std::invalid_argument("PairwiseCounts: E is not symmetric");
        }
        if (n_(a, b) + n_(b, a) + e_(a, b) != totals_(a, b)) {
          throw std::invalid_argument("PairwiseCounts: N + Nt + E does not match pair total");
        }
        if (totals_(a, b) > total_) {
          throw std::invalid_argument("PairwiseCounts: pair total exceeds total weight");
        }
      }
    }
  }

  // Counts where every pair was judged by the whole population n.
  static PairwiseCounts complete(AlternativeSet alternatives, Matrix<Weight> strict,
                                 Matrix<Weight> indifferent, Weight n) {
    const std::size_t m = alternatives.size();
    Matrix<Weight> totals(m, m, Weight(0));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b) totals(a, b) = n;
      }
    }
    return PairwiseCounts(std::move(alternatives), std::move(strict),
                          std::move(indifferent), std::move(totals), n);
  }

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t size() const { return alternatives_.size(); }
  const Matrix<Weight>& strict() const { return n_; }
  const Matrix<Weight>& indifferent() const { return e_; }
  const Matrix<Weight>& pair_totals() const { return totals_; }
  const Weight& total_weight() const { return total_; }

  const Weight& n(AltIndex a, AltIndex b) const { return n_(a, b); }
  const Weight& e(AltIndex a, AltIndex b) const { return e_(a, b); }
  const Weight& pair_total(AltIndex a, AltIndex b) const { return totals_(a, b); }

  bool has_indifference() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (e_(a, b) != Weight(0)) return true;
      }
    }
    return false;
  }

  // Whether alternative a took part in any observed comparison.
  bool observed(AltIndex a) const {
    for (std::size_t b = 0; b < size(); ++b) {
      if (totals_(a, b) > Weight(0)) return true;
    }
    return false;
  }

 private:
  AlternativeSet alternatives_;
  Matrix<Weight> n_;
  Matrix<Weight> e_;
  Matrix<Weight> totals_;
  Weight total_;
};

/// M = N - Nᵀ, exact.
class MarginMatrix {
 public:
  MarginMatrix(AlternativeSet alternatives, Matrix<Weight> margins, Weight total_weight)
      : alternatives_(std::move(alternatives)), m_(std::move(margins)), total_(total_weight) {
    const std::size_t m = alternatives_.size();
    if (m_.rows() != m || m_.cols() != m) {
      throw std::invalid_argument("MarginMatrix: bad shape");
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (m_(a, b) != -m_(b, a)) {
          throw std::invalid_argument("MarginMatrix: not antisymmetric");
        }
        if (m_(a, b) > total_ || m_(a, b) < -total_) {
          throw std::invalid_argument("MarginMatrix: entry outside [-n, n]");
        }
      }
    }
  }

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t size() const { return alternatives_.size(); }
  const Matrix<Weight>& exact() const { return m_; }
  const Weight& operator()(AltIndex a, AltIndex b) const { return m_(a, b); }
  const Weight& total_weight() const { return total_; }

  MatrixD to_double() const {
    return m_.map([](const Weight& w) { return mlottery::to_double(w); });
  }

  // M / n.
  MatrixD proportions() const {
    return m_.map([this](const Weight& w) { return mlottery::to_double(w / total_); });
  }

 private:
  AlternativeSet alternatives_;
  Matrix<Weight> m_;
  Weight total_;
};

inline constexpr double kSelectionTolerance = 1e-12;

/// Selection probabilities P̃(a ≻ b) = P(a ≻ b) + ½ P(a ∼ b), diagonal ½.
class SelectionMatrix {
 public:
  // From floating point probabilities; complementarity checked to 1e-12.
  SelectionMatrix(AlternativeSet alternatives, MatrixD probabilities)
      : alternatives_(std::move(alternatives)), p_(std::move(probabilities)) {
    validate();
  }

  // From exact probabilities; complementarity checked exactly.
  SelectionMatrix(AlternativeSet alternatives, Matrix<Weight> exact)
      : alternatives_(std::move(alternatives)),
        p_(exact.map([](const Weight& w) { return mlottery::to_double(w); })),
        exact_(std::move(exact)) {
    const std::size_t m = alternatives_.size();
    if (exact_->rows() != m || exact_->cols() != m) {
      throw std::invalid_argument("SelectionMatrix: bad shape");
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if ((*exact_)(a, b) + (*exact_)(b, a) != Weight(1)) {
          throw std::invalid_argument("SelectionMatrix: P(a,b) + P(b,a) != 1");
        }
      }
    }
    validate();
  }

  static SelectionMatrix uniform(AlternativeSet alternatives) {
    const std::size_t m = alternatives.size();
    return SelectionMatrix(std::move(alternatives), Matrix<Weight>(m, m, Weight(1, 2)));
  }

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t size() const { return alternatives_.size(); }
  const MatrixD& probabilities() const { return p_; }
  const std::optional<Matrix<Weight>>& exact() const { return exact_; }
  double operator()(AltIndex a, AltIndex b) const { return p_(a, b); }

  // 2P̃ - J: the per-pair normalized margin game with the same equilibria.
  MatrixD margins() const {
    return p_.map([](double p) { return 2.0 * p - 1.0; });
  }

 private:
  void validate() const {
    const std::size_t m = alternatives_.size();
    if (p_.rows() != m || p_.cols() != m) {
      throw std::invalid_argument("SelectionMatrix: bad shape");
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (p_(a, a) != 0.5) throw std::invalid_argument("SelectionMatrix: diagonal must be 1/2");
      for (std::size_t b = 0; b < m; ++b) {
        const double p = p_(a, b);
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
          throw std::invalid_argument("SelectionMatrix: entry outside [0,1]");
        }
        if (std::abs(p + p_(b, a) - 1.0) > kSelectionTolerance) {
          throw std::invalid_argument("SelectionMatrix: P(a,b) + P(b,a) != 1");
        }
      }
    }
  }

  AlternativeSet alternatives_;
  MatrixD p_;
  std::optional<Matrix<Weight>> exact_;
};

inline PairwiseCounts pairwise_counts(const PreferenceProfile& profile) {
  const std::size_t m = profile.size();
  Matrix<Weight> strict(m, m, Weight(0));
  for (const auto& g : profile.groups()) {
    for (std::size_t hi = 0; hi < m; ++hi) {
      for (std::size_t lo = hi + 1; lo < m; ++lo) {
        strict(g.ranking[hi], g.ranking[lo]) += g.weight;
      }
    }
  }
  return PairwiseCounts::complete(profile.alternatives(), std::move(strict),
                                  Matrix<Weight>(m, m, Weight(0)), profile.total_weight());
}

inline MarginMatrix margin_matrix(const PairwiseCounts& counts) {
  const std::size_t m = counts.size();
  Matrix<Weight> margins(m, m, Weight(0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) margins(a, b) = counts.n(a, b) - counts.n(b, a);
  }
  return MarginMatrix(counts.alternatives(), std::move(margins), counts.total_weight());
}

/// P̃(a,b) = (N(a,b) + E(a,b)/2) / n_ab with n_ab the pair total. Pairs
/// nobody judged fall back to the empirical preference rules: an observed
/// alternative is preferred to one that never appears (1.0), anything else
/// is a coin flip (0.5).
inline SelectionMatrix selection_matrix(const PairwiseCounts& counts) {
  const std::size_t m = counts.size();
  Matrix<Weight> p(m, m, Weight(1, 2));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const Weight& total = counts.pair_total(a, b);
      if (total > Weight(0)) {
        p(a, b) = (counts.n(a, b) + counts.e(a, b) / 2) / total;
      } else if (counts.observed(a) != counts.observed(b)) {
        p(a, b) = counts.observed(a) ? Weight(1) : Weight(0);
      }
    }
  }
  return SelectionMatrix(counts.alternatives(), std::move(p));
}

}  // namespace mlottery
