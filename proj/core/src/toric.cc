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
#include "toricdegen/toric.h"

#include <utility>

#include "toricdegen/errors.h"

namespace toricdegen {

SemigroupPresentation::SemigroupPresentation(GeneratorMatrix a) : a_(std::move(a)) {
  const PointednessResult p = IsPointed(a_);
  pointed_ = p.pointed;
  functional_ = p.functional;
  full_lattice_ = IsFullLattice(a_);
  kernel_ = LatticeKernel(a_);
  for (const IntVector& col : a_.columns()) {
    if (IsZero(col)) has_zero_generator_ = true;
  }
}

void SemigroupPresentation::RequireFiniteFibers() const {
  if (!pointed_) {
    throw NotPointed("the semigroup is not pointed (S ∩ -S ≠ {0}); fibers and "
                     "the divisibility order are not finite");
  }
  if (has_zero_generator_) {
    throw NotPointed("a zero generator makes every fiber infinite");
  }
}

IntVector Pi(const GeneratorMatrix& a, const IntVector& u) {
  if (!IsNonNegative(u)) throw InvalidParams("π_A is defined on N^n");
  return a.Apply(u);
}

std::vector<Binomial> ToricIdeal(const SemigroupPresentation& s) {
  const std::size_t n = s.count();
  std::vector<Binomial> lattice_ideal;
  for (const IntVector& u : s.kernel_basis()) {
    IntVector plus = ZeroVector(n);
    IntVector minus = ZeroVector(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] > 0) plus[i] = u[i];
      else minus[i] = -u[i];
    }
    lattice_ideal.push_back(Binomial::FromExponents(plus, minus));
  }
  return SaturateVariables(lattice_ideal, n);
}

GeneratorMatrix BuildAw(const GeneratorMatrix& a, const IntVector& w) {
  if (w.size() != a.count()) {
    throw DimensionMismatch("weight vector has length " + std::to_string(w.size()) +
                            " but there are " + std::to_string(a.count()) +
                            " generators");
  }
  if (!IsNonNegative(w)) throw InvalidParams("weights must be nonnegative");
  const std::size_t d = a.ambient_dim();
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < a.count(); ++i) {
    IntVector c = a.column(i);
    c.push_back(w[i]);
    cols.push_back(std::move(c));
  }
  cols.push_back(UnitVector(d + 1, d));
  return GeneratorMatrix(d + 1, std::move(cols));
}

DegenerationContext::DegenerationContext(const SemigroupPresentation& base, IntVector w)
    : base_(base),
      w_(std::move(w)),
      degenerated_(BuildAw(base.generators(), w_)) {}

Binomial DegenerateBinomial(const Binomial& g, const IntVector& w) {
  Binomial oriented = g;
  Integer wl = Dot(w, g.lead.exponents());
  Integer wt = Dot(w, g.trail.exponents());
  if (wl < wt) {
    std::swap(oriented.lead, oriented.trail);
    std::swap(wl, wt);
  }
  const std::size_t n = g.nvars();
  Monomial lead = oriented.lead.Resized(n + 1);
  IntVector trail = oriented.trail.Resized(n + 1).exponents();
  trail[n] = wl - wt;
  return Binomial(std::move(lead), Monomial(std::move(trail)));
}

TermOrder RefinedOrder(const IntVector& w, TieBreak tiebreak,
                       std::vector<std::size_t> permutation) {
  return TermOrder(w, tiebreak, std::move(permutation));
}

GroebnerBasis RefinedGroebnerBasis(const DegenerationContext& ctx,
                                   const TermOrder& order) {
  if (order.weight() != ctx.weight()) {
    throw InvalidParams("term order does not refine the degeneration weight");
  }
  return Buchberger(ToricIdeal(ctx.base()), order);
}

std::vector<Binomial> DegenerateIdeal(const DegenerationContext& ctx,
                                      const TermOrder& order) {
  std::vector<Binomial> out;
  for (const Binomial& g : RefinedGroebnerBasis(ctx, order).elements) {
    out.push_back(DegenerateBinomial(g, ctx.weight()));
  }
  return out;
}

std::vector<Binomial> DegenerateIdeal(const DegenerationContext& ctx,
                                      TieBreak tiebreak) {
  return DegenerateIdeal(ctx, RefinedOrder(ctx.weight(), tiebreak));
}

TheoremMainReport VerifyTheoremMain(const DegenerationContext& ctx,
                                    TieBreak tiebreak) {
  return VerifyTheoremMain(ctx, RefinedOrder(ctx.weight(), tiebreak));
}

TheoremMainReport VerifyTheoremMain(const DegenerationContext& ctx,
                                    const TermOrder& order) {
  const std::size_t nvars = ctx.base().count() + 1;
  const TermOrder canonical = TermOrder::DegRevLex(nvars);
  TheoremMainReport report;
  report.degenerated_generators = DegenerateIdeal(ctx, order);
  report.degenerated_basis = Buchberger(report.degenerated_generators, canonical);
  report.toric_aw_basis = Buchberger(ToricIdeal(ctx.degenerated()), canonical);
  report.equal = report.degenerated_basis.elements == report.toric_aw_basis.elements;
  return report;
}

std::vector<Binomial> DehomogenizeT(const std::vector<Binomial>& gens) {
  std::vector<Binomial> out;
  for (const Binomial& g : gens) {
    const std::size_t n = g.nvars();
    if (n == 0) throw DimensionMismatch("cannot drop t from a 0-variable binomial");
    Monomial lead = g.lead.Resized(n - 1, /*allow_drop=*/true);
    Monomial trail = g.trail.Resized(n - 1, /*allow_drop=*/true);
    if (lead != trail) out.emplace_back(std::move(lead), std::move(trail));
  }
  return out;
}

}  // namespace toricdegen
