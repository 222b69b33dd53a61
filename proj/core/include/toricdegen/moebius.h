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
#ifndef TORICDEGEN_MOEBIUS_H_
#define TORICDEGEN_MOEBIUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "toricdegen/integer.h"
#include "toricdegen/semigroup.h"
#include "toricdegen/toric.h"

namespace toricdegen {

inline constexpr std::size_t kMaxSubsetGenerators = 20;

// μ_S(z) by the interval recursion μ(0) = 1, μ(z) = -Σ_{s in [0, z), s != z} μ(s).
// Zero for z outside S. Throws NotPointed.
Integer MuBruteForce(const SemigroupPresentation& s, const IntVector& z);

// μ_S on every element of S with functional value <= bound.
class MoebiusTable {
 public:
  MoebiusTable(const SemigroupPresentation& s, const Integer& bound);

  // Throws InvalidParams when z is above the bound.
  Integer Mu(const IntVector& z) const;
  const std::vector<IntVector>& elements() const { return elements_; }
  const Integer& bound() const { return bound_; }

 private:
  IntVector functional_;
  Integer bound_;
  std::vector<IntVector> elements_;
  std::unordered_set<IntVector, IntVectorHash> in_s_;
  std::unordered_map<IntVector, Integer, IntVectorHash> nonzero_;
};

// Data for the closed formulas: S with its Betti elements, and optionally a
// weight w with the Betti elements of S_w.
class MoebiusContext {
 public:
  explicit MoebiusContext(const SemigroupPresentation& s);
  MoebiusContext(const SemigroupPresentation& s, IntVector w);

  const SemigroupPresentation& semigroup() const { return s_; }
  bool pointed() const { return s_.pointed(); }
  bool full_lattice() const { return s_.full_lattice(); }
  const std::vector<IntVector>& betti() const { return betti_; }
  const std::optional<IntVector>& unique_betti() const { return unique_betti_; }
  const std::optional<IntVector>& weight() const { return w_; }
  const std::vector<IntVector>& degenerated_betti() const { return degenerated_betti_; }
  const std::optional<Integer>& d_w() const { return d_w_; }
  // S_w, when a weight was given.
  const SemigroupPresentation* degenerated() const {
    return degenerated_ ? &*degenerated_ : nullptr;
  }
  // Why the closed formulas do not apply; empty when they do.
  const std::string& closed_formula_obstruction() const { return obstruction_; }
  const std::string& degeneration_obstruction() const { return degeneration_obstruction_; }

 private:
  SemigroupPresentation s_;
  std::vector<IntVector> betti_;
  std::optional<IntVector> unique_betti_;
  std::optional<IntVector> w_;
  std::optional<SemigroupPresentation> degenerated_;
  std::vector<IntVector> degenerated_betti_;
  std::optional<Integer> d_w_;
  std::string obstruction_;
  std::string degeneration_obstruction_;
};

struct SubsetWitness {
  // Zero-based generator indices, ascending. Index n stands for the t column
  // in B_z.
  std::vector<std::size_t> subset;
  Integer k;
  std::optional<Integer> l;

  friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

// {A ⊂ {1..n} : z = Σ_{i in A} a_i + k_A b, k_A in N}. Subsets are visited
// as bitmasks in increasing order. Throws MissingUniqueBetti, LimitExceeded.
std::vector<SubsetWitness> Az(const MoebiusContext& ctx, const IntVector& z,
                              std::size_t max_n = kMaxSubsetGenerators);

// Σ_{A in A_z} (-1)^{|A|} C(k_A + n - d - 1, k_A). Throws HypothesisViolated.
Integer MuClosed(const MoebiusContext& ctx, const IntVector& z,
                 std::size_t max_n = kMaxSubsetGenerators);

// The analogue of A_z for (z, λ) in S_w with the Betti element (b, d_w).
// Throws MissingDegenerationData, LimitExceeded.
std::vector<SubsetWitness> Bz(const MoebiusContext& ctx, const IntVector& z,
                              const Integer& lambda,
                              std::size_t max_n = kMaxSubsetGenerators);

// μ_{S_w}(z, λ) from A_z: the sum over λ = l_j minus the sum over
// λ = l_j + 1, with the n and d of S. Throws HypothesisViolated.
Integer MuDegeneration(const MoebiusContext& ctx, const IntVector& z,
                       const Integer& lambda,
                       std::size_t max_n = kMaxSubsetGenerators);

}  // namespace toricdegen

#endif  // TORICDEGEN_MOEBIUS_H_
