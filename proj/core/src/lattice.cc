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
#include "toricdegen/lattice.h"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "toricdegen/errors.h"
#include "toricdegen/exact_lp.h"

namespace toricdegen {
namespace {

using boost::multiprecision::abs;

// Floor division for arbitrary precision integers.
Integer FloorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void SubtractMultiple(IntVector& target, const Integer& k,
                      const IntVector& source) {
  if (k == 0) return;
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= k * source[i];
}

// Brings rows into echelon form over the first `cols` columns using
// unimodular row operations. Returns the number of pivot rows; rows at or
// beyond that index are zero on those columns.
std::size_t Echelonize(std::vector<IntVector>& rows, std::size_t cols,
                       std::vector<std::size_t>* pivot_cols = nullptr) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (!best || abs(rows[r][c]) < abs(rows[*best][c])) best = r;
      }
      if (!best) break;
      std::swap(rows[pivot_row], rows[*best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        SubtractMultiple(rows[r], FloorDiv(rows[r][c], rows[pivot_row][c]),
                         rows[pivot_row]);
        if (rows[r][c] != 0) done = false;
      }
      if (done) {
        if (pivot_cols) pivot_cols->push_back(c);
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

IntVector PrimitiveIntegerVector(const std::vector<Rational>& v) {
  Integer denominator_lcm = 1;
  for (const Rational& x : v) {
    denominator_lcm = Lcm(denominator_lcm, boost::multiprecision::denominator(x));
  }
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * denominator_lcm;
    out[i] = boost::multiprecision::numerator(scaled);
    g = Gcd(g, out[i]);
  }
  if (g > 1) {
    for (Integer& x : out) x /= g;
  }
  return out;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(std::size_t ambient_dim,
                                 std::vector<IntVector> columns)
    : ambient_dim_(ambient_dim), columns_(std::move(columns)) {
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].size() != ambient_dim_) {
      throw DimensionMismatch("column " + std::to_string(i + 1) +
                              " has length " +
                              std::to_string(columns_[i].size()) +
                              ", expected " + std::to_string(ambient_dim_));
    }
    if (!seen.insert(columns_[i]).second) {
      warnings_.push_back("duplicate generator " + ToString(columns_[i]) +
                          " at column " + std::to_string(i + 1));
    }
  }
}

GeneratorMatrix GeneratorMatrix::FromColumns(
    std::initializer_list<std::initializer_list<long long>> columns) {
  std::vector<IntVector> cols;
  std::size_t dim = 0;
  for (const auto& c : columns) {
    IntVector v;
    for (long long x : c) v.emplace_back(x);
    dim = v.size();
    cols.push_back(std::move(v));
  }
  return GeneratorMatrix(dim, std::move(cols));
}

GeneratorMatrix GeneratorMatrix::Numerical(const std::vector<long long>& values) {
  std::vector<IntVector> cols;
  for (long long x : values) cols.push_back(IntVector{Integer(x)});
  return GeneratorMatrix(1, std::move(cols));
}

std::vector<IntVector> GeneratorMatrix::Rows() const {
  std::vector<IntVector> rows(ambient_dim_, IntVector(count()));
  for (std::size_t j = 0; j < count(); ++j) {
    for (std::size_t i = 0; i < ambient_dim_; ++i) rows[i][j] = columns_[j][i];
  }
  return rows;
}

IntVector GeneratorMatrix::Apply(const IntVector& u) const {
  if (u.size() != count()) {
    throw DimensionMismatch("vector of length " + std::to_string(u.size()) +
                            " applied to " + std::to_string(count()) +
                            " generators");
  }
  IntVector out = ZeroVector(ambient_dim_);
  for (std::size_t j = 0; j < count(); ++j) {
    if (u[j] == 0) continue;
    for (std::size_t i = 0; i < ambient_dim_; ++i) out[i] += u[j] * columns_[j][i];
  }
  return out;
}

std::vector<IntVector> HermiteNormalForm(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::vector<std::size_t> pivots;
  const std::size_t rank = Echelonize(rows, cols, &pivots);
  rows.resize(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    const std::size_t c = pivots[r];
    if (rows[r][c] < 0) {
      for (Integer& x : rows[r]) x = -x;
    }
    for (std::size_t above = 0; above < r; ++above) {
      SubtractMultiple(rows[above], FloorDiv(rows[above][c], rows[r][c]), rows[r]);
    }
  }
  return rows;
}

std::vector<IntVector> LatticeKernel(const GeneratorMatrix& a) {
  const std::size_t n = a.count();
  const std::size_t d = a.ambient_dim();
  // Row i is (a_i | e_i); echelonizing the first d columns with unimodular
  // operations leaves kernel vectors in the identity block of zero rows.
  std::vector<IntVector> rows(n, IntVector(d + n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) rows[i][k] = a.column(i)[k];
    rows[i][d + i] = 1;
  }
  const std::size_t rank = Echelonize(rows, d);
  std::vector<IntVector> kernel;
  for (std::size_t r = rank; r < n; ++r) {
    kernel.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(d),
                        rows[r].end());
  }
  return HermiteNormalForm(std::move(kernel));
}

std::size_t Rank(const GeneratorMatrix& a) {
  std::vector<IntVector> cols = a.columns();
  return Echelonize(cols, a.ambient_dim());
}

std::vector<Integer> SmithInvariants(const GeneratorMatrix& a) {
  std::vector<IntVector> m = a.Rows();
  const std::size_t rows = m.size();
  const std::size_t cols = a.count();
  std::vector<Integer> invariants;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (!best || abs(m[i][j]) < abs(m[best->first][best->second]))) {
            best = {i, j};
          }
        }
      }
      if (!best) {
        std::sort(invariants.begin(), invariants.end());
        return invariants;
      }
      std::swap(m[t], m[best->first]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][best->second]);
      const Integer p = m[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = FloorDiv(m[i][t], p);
        SubtractMultiple(m[i], q, m[t]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = FloorDiv(m[t][j], p);
        if (q != 0) {
          for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
        }
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % p != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row) {
        for (std::size_t j = t; j < cols; ++j) m[t][j] += m[*bad_row][j];
        continue;
      }
      invariants.push_back(abs(p));
      break;
    }
  }
  std::sort(invariants.begin(), invariants.end());
  return invariants;
}

bool IsFullLattice(const GeneratorMatrix& a) {
  const std::vector<Integer> inv = SmithInvariants(a);
  if (inv.size() != a.ambient_dim()) return false;
  return std::all_of(inv.begin(), inv.end(),
                     [](const Integer& x) { return x == 1; });
}

PointednessResult IsPointed(const GeneratorMatrix& a) {
  const std::size_t d = a.ambient_dim();
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < a.count(); ++i) {
    if (!IsZero(a.column(i))) nonzero.push_back(i);
  }
  PointednessResult result;
  if (nonzero.empty()) {
    result.pointed = true;
    result.functional = ZeroVector(d);
    return result;
  }
  // Variables (c+, c-, s): a_i·(c+ - c-) - s_i = 1, minimising |c|_1.
  const std::size_t k = nonzero.size();
  RationalMatrix m(k, std::vector<Rational>(2 * d + k, Rational(0)));
  std::vector<Rational> rhs(k, Rational(1));
  std::vector<Rational> cost(2 * d + k, Rational(0));
  for (std::size_t l = 0; l < 2 * d; ++l) cost[l] = 1;
  for (std::size_t r = 0; r < k; ++r) {
    const IntVector& col = a.column(nonzero[r]);
    for (std::size_t l = 0; l < d; ++l) {
      m[r][l] = Rational(col[l]);
      m[r][d + l] = Rational(-col[l]);
    }
    m[r][2 * d + r] = -1;
  }
  const LpResult lp = SolveStandardForm(m, rhs, cost);
  if (lp.status != LpStatus::kOptimal) return result;
  std::vector<Rational> c(d);
  for (std::size_t l = 0; l < d; ++l) c[l] = lp.x[l] - lp.x[d + l];
  result.pointed = true;
  result.functional = PrimitiveIntegerVector(c);
  return result;
}

ConeMembership ConeMember(const IntVector& z, const GeneratorMatrix& a) {
  if (z.size() != a.ambient_dim()) {
    throw DimensionMismatch("point dimension " + std::to_string(z.size()) +
                            " != ambient dimension " +
                            std::to_string(a.ambient_dim()));
  }
  ConeMembership result;
  const std::size_t d = a.ambient_dim();
  const std::size_t n = a.count();
  if (IsZero(z)) {
    result.member = true;
    result.certificate.kind = RationalCertificate::Kind::kMembership;
    result.certificate.coefficients.assign(n, Rational(0));
    return result;
  }
  RationalMatrix m(d, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    rhs[i] = Rational(z[i]);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a.column(j)[i]);
  }
  const LpResult lp = SolveStandardForm(m, rhs);
  if (lp.status == LpStatus::kOptimal) {
    result.member = true;
    result.certificate.kind = RationalCertificate::Kind::kMembership;
    result.certificate.coefficients = lp.x;
  }
  return result;
}

bool InZonotope(const IntVector& z, const GeneratorMatrix& a) {
  const std::size_t d = a.ambient_dim();
  const std::size_t n = a.count();
  if (z.size() != d) throw DimensionMismatch("point dimension mismatch");
  if (n == 0) return IsZero(z);
  // Variables (α, s) with α + s = 1.
  RationalMatrix m(d + n, std::vector<Rational>(2 * n, Rational(0)));
  std::vector<Rational> rhs(d + n, Rational(1));
  for (std::size_t i = 0; i < d; ++i) {
    rhs[i] = Rational(z[i]);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a.column(j)[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    m[d + j][j] = 1;
    m[d + j][n + j] = 1;
  }
  return SolveStandardForm(m, rhs).status == LpStatus::kOptimal;
}

std::vector<IntVector> ZonotopePoints(const GeneratorMatrix& a) {
  if (!IsPointed(a).pointed) {
    throw NotPointed("zonotope enumeration requires a pointed configuration");
  }
  const std::size_t d = a.ambient_dim();
  IntVector low = ZeroVector(d);
  IntVector high = ZeroVector(d);
  for (const IntVector& col : a.columns()) {
    for (std::size_t k = 0; k < d; ++k) {
      if (col[k] < 0) low[k] += col[k];
      else high[k] += col[k];
    }
  }
  std::vector<IntVector> points;
  IntVector z = low;
  while (true) {
    if (InZonotope(z, a)) points.push_back(z);
    // Odometer over the box, last coordinate fastest.
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (z[k] < high[k]) {
        ++z[k];
        for (std::size_t j = k + 1; j < d; ++j) z[j] = low[j];
        break;
      }
      if (k == 0) return points;
    }
    if (d == 0) return points;
  }
}

}  // namespace toricdegen
