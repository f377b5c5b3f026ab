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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlottery/matrix.hpp"

namespace mlottery {

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimplexResult {
  std::vector<double> primal;  // y
  std::vector<double> dual;    // one multiplier per constraint row
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Dense tableau simplex for
///
///     maximize cᵀy  subject to  A y ≤ b,  y ≥ 0,   with b ≥ 0,
///
/// so the slack basis is feasible and no phase one is needed. Entering and
/// leaving variables follow Bland's rule (lowest index), which cannot cycle
/// on the degenerate vertices that tied margins produce. Dual multipliers are
/// read off the objective row under the slack columns.
inline SimplexResult simplex_maximize(const MatrixD& a, const std::vector<double>& b,
                                      const std::vector<double>& c,
                                      std::size_t max_pivots = 100000) {
  constexpr double kPivotTol = 1e-12;
  const std::size_t rows = a.rows();
  const std::size_t vars = a.cols();
  if (b.size() != rows || c.size() != vars) {
    throw std::invalid_argument("simplex: dimension mismatch");
  }
  for (double x : b) {
    if (x < 0.0) throw std::invalid_argument("simplex: negative right-hand side");
  }

  const std::size_t width = vars + rows + 1;  // structural | slack | rhs
  MatrixD t(rows + 1, width, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < vars; ++j) t(r, j) = a(r, j);
    t(r, vars + r) = 1.0;
    t(r, width - 1) = b[r];
  }
  const std::size_t obj = rows;
  for (std::size_t j = 0; j < vars; ++j) t(obj, j) = -c[j];

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = vars + r;

  std::size_t pivots = 0;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(obj, j) < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      if (t(r, enter) <= kPivotTol) continue;
      const double ratio = t(r, width - 1) / t(r, enter);
      if (ratio < best_ratio - kPivotTol ||
          (ratio <= best_ratio + kPivotTol && leave < rows && basis[r] < basis[leave])) {
        if (ratio < best_ratio) best_ratio = ratio;
        leave = r;
      }
    }
    if (leave == rows) throw NumericError("simplex: problem is unbounded");
    if (++pivots > max_pivots) {
      throw NumericError("simplex: pivot limit of " + std::to_string(max_pivots) + " exceeded");
    }

    const double pivot = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double factor = t(r, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t(r, j) -= factor * t(leave, j);
      t(r, enter) = 0.0;
    }
    basis[leave] = enter;
  }

  SimplexResult out;
  out.primal.assign(vars, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) out.primal[basis[r]] = t(r, width - 1);
  }
  out.dual.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) out.dual[r] = t(obj, vars + r);
  out.objective = t(obj, width - 1);
  out.pivots = pivots;
  return out;
}

}  // namespace mlottery
