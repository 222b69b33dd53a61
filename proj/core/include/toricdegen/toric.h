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
#ifndef TORICDEGEN_TORIC_H_
#define TORICDEGEN_TORIC_H_

#include <cstddef>
#include <vector>

#include "toricdegen/binomial.h"
#include "toricdegen/groebner.h"
#include "toricdegen/integer.h"
#include "toricdegen/lattice.h"

namespace toricdegen {

// S = NA together with facts about A computed once at construction.
class SemigroupPresentation {
 public:
  explicit SemigroupPresentation(GeneratorMatrix a);

  const GeneratorMatrix& generators() const { return a_; }
  std::size_t ambient_dim() const { return a_.ambient_dim(); }
  std::size_t count() const { return a_.count(); }
  bool pointed() const { return pointed_; }
  // Integer functional with functional·a_i >= 1 on nonzero generators.
  const IntVector& functional() const { return functional_; }
  bool full_lattice() const { return full_lattice_; }
  const std::vector<IntVector>& kernel_basis() const { return kernel_; }
  bool has_zero_generator() const { return has_zero_generator_; }

  Integer Height(const IntVector& z) const { return Dot(functional_, z); }
  // Throws NotPointed unless S is pointed with no zero generator, which is
  // what finite fibers need.
  void RequireFiniteFibers() const;

 private:
  GeneratorMatrix a_;
  bool pointed_ = false;
  IntVector functional_;
  bool full_lattice_ = false;
  std::vector<IntVector> kernel_;
  bool has_zero_generator_ = false;
};

// π_A(u) = u_1 a_1 + ... + u_n a_n. Requires u >= 0.
IntVector Pi(const GeneratorMatrix& a, const IntVector& u);

// Generators of I_A: lattice basis binomials saturated by all variables.
std::vector<Binomial> ToricIdeal(const SemigroupPresentation& s);

// (A, w, A_w): A_w has the columns (a_i, w_i) followed by (0, ..., 0, 1);
// the extra variable t sits at index n.
class DegenerationContext {
 public:
  // Throws DimensionMismatch when |w| != n, InvalidParams when w has a
  // negative entry.
  DegenerationContext(const SemigroupPresentation& base, IntVector w);

  const SemigroupPresentation& base() const { return base_; }
  const IntVector& weight() const { return w_; }
  const SemigroupPresentation& degenerated() const { return degenerated_; }
  const GeneratorMatrix& a_w() const { return degenerated_.generators(); }
  std::size_t t_index() const { return base_.count(); }

 private:
  SemigroupPresentation base_;
  IntVector w_;
  SemigroupPresentation degenerated_;
};

GeneratorMatrix BuildAw(const GeneratorMatrix& a, const IntVector& w);

// g_t = x^u - x^v t^{w·u - w·v} over n + 1 variables. If w·u < w·v the
// binomial is flipped first; when w·u = w·v the given orientation is kept.
Binomial DegenerateBinomial(const Binomial& g, const IntVector& w);

// Term order on the base variables refining w with the given tiebreak.
TermOrder RefinedOrder(const IntVector& w, TieBreak tiebreak,
                       std::vector<std::size_t> permutation = {});

// Groebner basis of I_A under `order`, which must refine w.
GroebnerBasis RefinedGroebnerBasis(const DegenerationContext& ctx,
                                   const TermOrder& order);

// {g_t : g in a Groebner basis of I_A under `order`}.
std::vector<Binomial> DegenerateIdeal(const DegenerationContext& ctx,
                                      const TermOrder& order);
std::vector<Binomial> DegenerateIdeal(const DegenerationContext& ctx,
                                      TieBreak tiebreak = TieBreak::kLex);

struct TheoremMainReport {
  bool equal = false;
  std::vector<Binomial> degenerated_generators;
  // Reduced bases of both ideals under degrevlex in n + 1 variables.
  GroebnerBasis degenerated_basis;
  GroebnerBasis toric_aw_basis;
};

// Computes I_{A_w} from scratch and (I_A)_t through a refined Groebner
// basis, and compares them.
TheoremMainReport VerifyTheoremMain(const DegenerationContext& ctx,
                                    const TermOrder& order);
TheoremMainReport VerifyTheoremMain(const DegenerationContext& ctx,
                                    TieBreak tiebreak = TieBreak::kLex);

// Sets t = 1 (drops the last variable); binomials that vanish are removed.
std::vector<Binomial> DehomogenizeT(const std::vector<Binomial>& gens);

}  // namespace toricdegen

#endif  // TORICDEGEN_TORIC_H_
