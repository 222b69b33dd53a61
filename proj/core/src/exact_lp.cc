// Copyright 2026 The toricdegen Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "toricdegen/exact_lp.h"

#include <cstddef>
#include <optional>

#include "toricdegen/errors.h"

namespace toricdegen {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cells_(rows, std::vector<Rational>(cols + 1, Rational(0))),
        basis_(rows, 0),
        cols_(cols) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  const Rational& rhs(std::size_t r) const { return cells_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void Pivot(std::size_t pr, std::size_t pc) {
    const Rational p = cells_[pr][pc];
    for (Rational& v : cells_[pr]) v /= p;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == pr || cells_[r][pc] == 0) continue;
      const Rational f = cells_[r][pc];
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (cells_[pr][c] != 0) cells_[r][c] -= f * cells_[pr][c];
      }
    }
    basis_[pr] = pc;
  }

  void EraseRow(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  Rational Objective(const std::vector<Rational>& cost) const {
    Rational z = 0;
    for (std::size_t r = 0; r < rows(); ++r) z += cost[basis_[r]] * rhs(r);
    return z;
  }

 private:
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

// Runs primal simplex with Bland's rule; only columns below
// `enterable` may enter the basis. Returns false when unbounded.
bool RunSimplex(Tableau& t, const std::vector<Rational>& cost,
                std::size_t enterable) {
  std::vector<bool> is_basic(t.cols(), false);
  while (true) {
    std::fill(is_basic.begin(), is_basic.end(), false);
    for (std::size_t r = 0; r < t.rows(); ++r) is_basic[t.basic(r)] = true;

    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < enterable; ++c) {
      if (is_basic[c]) continue;
      Rational reduced = cost[c];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t.at(r, c) != 0) reduced -= cost[t.basic(r)] * t.at(r, c);
      }
      if (reduced < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) return true;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.at(r, *entering) <= 0) continue;
      Rational ratio = t.rhs(r) / t.at(r, *entering);
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && t.basic(r) < t.basic(*leaving))) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (!leaving) return false;
    t.Pivot(*leaving, *entering);
  }
}

}  // namespace

LpResult SolveStandardForm(const RationalMatrix& m,
                           const std::vector<Rational>& rhs,
                           const std::vector<Rational>& cost) {
  const std::size_t rows = m.size();
  if (rhs.size() != rows) throw DimensionMismatch("LP: rhs size != row count");
  const std::size_t n = rows == 0 ? cost.size() : m[0].size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch("LP: ragged matrix");
  }
  if (!cost.empty() && cost.size() != n) {
    throw DimensionMismatch("LP: cost size != column count");
  }

  LpResult result;
  Tableau t(rows, n + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = rhs[r] < 0;
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = flip ? Rational(-m[r][c]) : m[r][c];
    t.at(r, n + r) = 1;
    t.rhs(r) = flip ? Rational(-rhs[r]) : rhs[r];
    t.basic(r) = n + r;
  }

  // Phase I: minimise the sum of artificial variables.
  std::vector<Rational> phase1(n + rows, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) phase1[n + r] = 1;
  RunSimplex(t, phase1, n + rows);
  if (t.Objective(phase1) != 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }

  // Drive artificial variables out of the basis; rows where that is
  // impossible are linearly dependent and dropped.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basic(r) < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < n; ++c) {
      if (t.at(r, c) != 0) {
        col = c;
        break;
      }
    }
    if (col) {
      t.Pivot(r, *col);
      ++r;
    } else {
      t.EraseRow(r);
    }
  }

  std::vector<Rational> phase2(n + rows, Rational(0));
  for (std::size_t c = 0; c < cost.size(); ++c) phase2[c] = cost[c];
  if (!RunSimplex(t, phase2, n)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) result.x[t.basic(r)] = t.rhs(r);
  result.objective = 0;
  for (std::size_t c = 0; c < cost.size(); ++c) result.objective += cost[c] * result.x[c];
  return result;
}

}  // namespace toricdegen
