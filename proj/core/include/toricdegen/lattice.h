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
#ifndef TORICDEGEN_LATTICE_H_
#define TORICDEGEN_LATTICE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "toricdegen/integer.h"

namespace toricdegen {

// The finite set A = {a_1, ..., a_n} ⊂ Z^d, stored column by column.
// Duplicate columns are accepted and reported through warnings().
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  // All columns must have length `ambient_dim`. Throws DimensionMismatch.
  GeneratorMatrix(std::size_t ambient_dim, std::vector<IntVector> columns);
  // Convenience for examples and tests: one initializer list per column.
  static GeneratorMatrix FromColumns(
      std::initializer_list<std::initializer_list<long long>> columns);
  // d = 1 matrix with the given entries.
  static GeneratorMatrix Numerical(const std::vector<long long>& values);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t count() const { return columns_.size(); }
  const IntVector& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<IntVector>& columns() const { return columns_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  // Rows as integer vectors of length count().
  std::vector<IntVector> Rows() const;
  // A·u for u of length count().
  IntVector Apply(const IntVector& u) const;

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> columns_;
  std::vector<std::string> warnings_;
};

struct RationalCertificate {
  enum class Kind { kMembership, kInfeasible };
  Kind kind = Kind::kInfeasible;
  std::vector<Rational> coefficients;
};

// Canonical (row-style) Hermite normal form of the lattice spanned by
// `rows`: echelon form, positive pivots, entries above each pivot reduced
// into [0, pivot). Zero rows are dropped.
std::vector<IntVector> HermiteNormalForm(std::vector<IntVector> rows);

// Basis of {u ∈ Z^n : A·u = 0}, in Hermite normal form.
std::vector<IntVector> LatticeKernel(const GeneratorMatrix& a);

std::size_t Rank(const GeneratorMatrix& a);

// Nonzero elementary divisors of A (the d x n matrix), ascending.
std::vector<Integer> SmithInvariants(const GeneratorMatrix& a);

// True iff the columns generate Z^d as a group.
bool IsFullLattice(const GeneratorMatrix& a);

struct PointednessResult {
  bool pointed = false;
  // Primitive integer functional with functional·a_i >= 1 for every nonzero
  // column; empty when not pointed.
  IntVector functional;
};

PointednessResult IsPointed(const GeneratorMatrix& a);

struct ConeMembership {
  bool member = false;
  RationalCertificate certificate;
};

// Exact test of z ∈ R>=0 A.
ConeMembership ConeMember(const IntVector& z, const GeneratorMatrix& a);

// Exact test of z ∈ {Σ α_i a_i : 0 <= α_i <= 1}.
bool InZonotope(const IntVector& z, const GeneratorMatrix& a);

// Lattice points of the zonotope {Σ α_i a_i : 0 <= α_i <= 1}, in
// lexicographic order. Throws NotPointed when A is not pointed.
std::vector<IntVector> ZonotopePoints(const GeneratorMatrix& a);

}  // namespace toricdegen

#endif  // TORICDEGEN_LATTICE_H_
