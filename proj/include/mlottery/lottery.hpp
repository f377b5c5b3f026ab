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
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlottery/profile.hpp"

namespace mlottery {

inline constexpr double kNegativeClamp = 1e-12;
inline constexpr double kSumTolerance = 1e-9;

/// Probability distribution over an alternative set. Entries down to -1e-12
/// are clamped to zero and the sum (which must be within 1e-9 of one) is
/// renormalized.
class Lottery {
 public:
  Lottery(AlternativeSet alternatives, std::vector<double> probabilities)
      : alternatives_(std::move(alternatives)), p_(std::move(probabilities)) {
    if (p_.size() != alternatives_.size()) {
      throw std::invalid_argument("Lottery: size mismatch");
    }
    double sum = 0.0;
    for (double& x : p_) {
      if (!std::isfinite(x) || x < -kNegativeClamp) {
        throw std::invalid_argument("Lottery: invalid probability");
      }
      x = std::max(x, 0.0);
      sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
      throw std::invalid_argument("Lottery: probabilities sum to " + std::to_string(sum));
    }
    for (double& x : p_) x /= sum;
  }

  static Lottery uniform(AlternativeSet alternatives) {
    const std::size_t m = alternatives.size();
    return Lottery(std::move(alternatives), std::vector<double>(m, 1.0 / static_cast<double>(m)));
  }

  static Lottery point_mass(AlternativeSet alternatives, AltIndex a) {
    std::vector<double> p(alternatives.size(), 0.0);
    p.at(a) = 1.0;
    return Lottery(std::move(alternatives), std::move(p));
  }

  // Normalizes nonnegative masses; used by samplers and averaging.
  static Lottery from_masses(AlternativeSet alternatives, std::vector<double> masses) {
    double sum = 0.0;
    for (double x : masses) sum += x;
    if (!(sum > 0.0)) throw std::invalid_argument("Lottery: zero total mass");
    for (double& x : masses) x /= sum;
    return Lottery(std::move(alternatives), std::move(masses));
  }

  const AlternativeSet& alternatives() const { return alternatives_; }
  std::size_t size() const { return p_.size(); }
  double operator[](AltIndex a) const { return p_[a]; }
  double at(const std::string& label) const { return p_[alternatives_.index(label)]; }
  std::span<const double> probabilities() const { return p_; }

  // First index attaining the maximum.
  AltIndex argmax() const {
    return static_cast<AltIndex>(std::max_element(p_.begin(), p_.end()) - p_.begin());
  }

  std::vector<AltIndex> support(double threshold = 1e-7) const {
    std::vector<AltIndex> out;
    for (std::size_t a = 0; a < p_.size(); ++a) {
      if (p_[a] > threshold) out.push_back(a);
    }
    return out;
  }

 private:
  AlternativeSet alternatives_;
  std::vector<double> p_;
};

inline double total_variation(const Lottery& x, const Lottery& y) {
  if (x.size() != y.size()) throw std::invalid_argument("total_variation: size mismatch");
  double sum = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a) sum += std::abs(x[a] - y[a]);
  return 0.5 * sum;
}

inline double linf_distance(const Lottery& x, const Lottery& y) {
  if (x.size() != y.size()) throw std::invalid_argument("linf_distance: size mismatch");
  double worst = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a) worst = std::max(worst, std::abs(x[a] - y[a]));
  return worst;
}

}  // namespace mlottery
