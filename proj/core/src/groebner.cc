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
#include "toricdegen/groebner.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "toricdegen/errors.h"
#include "toricdegen/exact_lp.h"

namespace toricdegen {
namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Binomial> OrientAll(const std::vector<Binomial>& gens,
                                const TermOrder& order) {
  std::vector<Binomial> out;
  std::set<Binomial> seen;
  for (const Binomial& g : gens) {
    if (g.nvars() != order.nvars()) {
      throw DimensionMismatch("generator arity differs from term order arity");
    }
    auto oriented = Binomial::Oriented(g.lead, g.trail, order);
    if (oriented && seen.insert(*oriented).second) out.push_back(*oriented);
  }
  return out;
}

// Largest power of variable `v` dividing both terms, divided out.
Binomial DivideContent(const Binomial& b, std::size_t v) {
  const Integer k = std::min(b.lead[v], b.trail[v]);
  if (k == 0) return b;
  const Monomial factor = Monomial::Variable(b.nvars(), v, k);
  return Binomial(b.lead.DivideBy(factor), b.trail.DivideBy(factor));
}

std::vector<Binomial> SaturateOneGraded(const std::vector<Binomial>& gens,
                                        std::size_t v, const IntVector& grading) {
  const std::size_t n = grading.size();
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != v) perm.push_back(i);
  }
  perm.push_back(v);
  const TermOrder order(grading, TieBreak::kRevLex, perm);
  const GroebnerBasis gb = Buchberger(gens, order);
  std::vector<Binomial> out;
  for (const Binomial& g : gb.elements) out.push_back(DivideContent(g, v));
  return out;
}

std::vector<Binomial> SaturateOneByElimination(const std::vector<Binomial>& gens,
                                               std::size_t v, std::size_t n) {
  // Extra variable y at index n; x_v·y - 1 turns x_v into a unit.
  std::vector<Binomial> lifted;
  for (const Binomial& g : gens) {
    lifted.emplace_back(g.lead.Resized(n + 1), g.trail.Resized(n + 1));
  }
  IntVector xy = ZeroVector(n + 1);
  xy[v] = 1;
  xy[n] = 1;
  lifted.emplace_back(Monomial(xy), Monomial::One(n + 1));
  const TermOrder order(UnitVector(n + 1, n), TieBreak::kDegRevLex);
  const GroebnerBasis gb = Buchberger(lifted, order);
  std::vector<Binomial> out;
  for (const Binomial& g : gb.elements) {
    if (g.lead[n] == 0 && g.trail[n] == 0) {
      out.emplace_back(g.lead.Resized(n), g.trail.Resized(n));
    }
  }
  return out;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::LeadingMonomials() const {
  std::vector<Monomial> out;
  for (const Binomial& b : elements) out.push_back(b.lead);
  return out;
}

Monomial NormalForm(const Monomial& m, const std::vector<Binomial>& basis,
                    const TermOrder& order) {
  (void)order;
  Monomial current = m;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const Binomial& g : basis) {
      if (g.lead.Divides(current)) {
        current = current.DivideBy(g.lead) * g.trail;
        reduced = true;
        break;
      }
    }
  }
  return current;
}

std::optional<Binomial> NormalForm(const Binomial& b,
                                   const std::vector<Binomial>& basis,
                                   const TermOrder& order) {
  return Binomial::Oriented(NormalForm(b.lead, basis, order),
                            NormalForm(b.trail, basis, order), order);
}

std::optional<Binomial> SPolynomial(const Binomial& f, const Binomial& g,
                                    const TermOrder& order) {
  const Monomial l = f.lead.Lcm(g.lead);
  return Binomial::Oriented(l.DivideBy(f.lead) * f.trail,
                            l.DivideBy(g.lead) * g.trail, order);
}

GroebnerBasis Buchberger(const std::vector<Binomial>& gens,
                         const TermOrder& order) {
  std::vector<Binomial> basis;
  for (const Binomial& g : OrientAll(gens, order)) {
    if (auto r = NormalForm(g, basis, order)) basis.push_back(*r);
  }
  std::vector<CriticalPair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead.IsCoprimeTo(basis[k].lead)) continue;
      pairs.push_back({i, k, basis[i].lead.Lcm(basis[k].lead)});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (order.Compare(it->lcm, best->lcm) == std::strong_ordering::less) best = it;
    }
    const CriticalPair pair = *best;
    *best = pairs.back();
    pairs.pop_back();

    // Chain criterion: skip when some third leading monomial divides the
    // lcm and both of its pairs with i and j have already been treated.
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == pair.i || k == pair.j || !basis[k].lead.Divides(pair.lcm)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::any_of(pairs.begin(), pairs.end(), [&](const CriticalPair& p) {
          return p.i == a && p.j == b;
        });
      };
      const Monomial lik = basis[pair.i].lead.Lcm(basis[k].lead);
      const Monomial ljk = basis[pair.j].lead.Lcm(basis[k].lead);
      if (lik != pair.lcm && ljk != pair.lcm && !pending(pair.i, k) &&
          !pending(pair.j, k)) {
        redundant = true;
      }
    }
    if (redundant) continue;

    const auto s = SPolynomial(basis[pair.i], basis[pair.j], order);
    if (!s) continue;
    if (auto r = NormalForm(*s, basis, order)) {
      basis.push_back(*r);
      add_pairs_for(basis.size() - 1);
    }
  }
  GroebnerBasis out;
  out.elements = std::move(basis);
  out.order = order;
  return ReduceBasis(out);
}

GroebnerBasis ReduceBasis(const GroebnerBasis& basis) {
  const TermOrder& order = basis.order;
  std::vector<Binomial> elements = OrientAll(basis.elements, order);
  std::sort(elements.begin(), elements.end(), [&](const Binomial& a, const Binomial& b) {
    const auto c = order.Compare(a.lead, b.lead);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return order.Compare(a.trail, b.trail) == std::strong_ordering::less;
  });
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < elements.size() && !drop; ++j) {
      if (i == j || !elements[j].lead.Divides(elements[i].lead)) continue;
      drop = elements[j].lead != elements[i].lead || j < i;
    }
    if (!drop) minimal.push_back(elements[i]);
  }
  GroebnerBasis out;
  out.order = order;
  out.reduced = true;
  for (const Binomial& g : minimal) {
    out.elements.emplace_back(g.lead, NormalForm(g.trail, minimal, order));
  }
  return out;
}

bool IsGroebnerBasis(const std::vector<Binomial>& elements,
                     const TermOrder& order) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const auto s = SPolynomial(elements[i], elements[j], order);
      if (s && NormalForm(*s, elements, order)) return false;
    }
  }
  return true;
}

bool IdealContains(const GroebnerBasis& basis, const Binomial& b) {
  return !NormalForm(b, basis.elements, basis.order).has_value();
}

bool IdealEqual(const std::vector<Binomial>& gens1,
                const std::vector<Binomial>& gens2, std::size_t nvars) {
  const TermOrder order = TermOrder::DegRevLex(nvars);
  return Buchberger(gens1, order).elements == Buchberger(gens2, order).elements;
}

std::optional<IntVector> PositiveGrading(const std::vector<Binomial>& gens,
                                         std::size_t nvars) {
  // g = 1 + s with s >= 0 and D·s = -D·1, minimising Σ s.
  RationalMatrix m;
  std::vector<Rational> rhs;
  for (const Binomial& b : gens) {
    const IntVector diff = b.Difference();
    std::vector<Rational> row(nvars);
    Rational total = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      row[i] = Rational(diff[i]);
      total += row[i];
    }
    m.push_back(std::move(row));
    rhs.push_back(-total);
  }
  const std::vector<Rational> cost(nvars, Rational(1));
  const LpResult lp = SolveStandardForm(m, rhs, cost);
  if (lp.status != LpStatus::kOptimal) return std::nullopt;
  Integer denominator_lcm = 1;
  std::vector<Rational> g(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    g[i] = lp.x[i] + 1;
    denominator_lcm = Lcm(denominator_lcm, boost::multiprecision::denominator(g[i]));
  }
  IntVector out(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    const Rational scaled = g[i] * denominator_lcm;
    out[i] = boost::multiprecision::numerator(scaled);
  }
  return out;
}

std::vector<Binomial> SaturateVariables(const std::vector<Binomial>& gens,
                                        std::size_t nvars) {
  std::vector<Binomial> current;
  for (const Binomial& g : gens) {
    if (g.nvars() != nvars) throw DimensionMismatch("generator arity != nvars");
    if (g.lead != g.trail) current.push_back(g);
  }
  if (current.empty()) return current;
  const std::optional<IntVector> grading = PositiveGrading(current, nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    current = grading ? SaturateOneGraded(current, v, *grading)
                      : SaturateOneByElimination(current, v, nvars);
  }
  return current;
}

std::vector<GradedGenerators> MinimalGenerators(const std::vector<Binomial>& gens,
                                                const GeneratorMatrix& grading) {
  const PointednessResult pointed = IsPointed(grading);
  if (!pointed.pointed) throw NotPointed("grading semigroup is not pointed");
  for (const IntVector& col : grading.columns()) {
    if (IsZero(col)) throw NotPointed("grading has a zero generator; fibers are infinite");
  }
  struct Item {
    Integer height;
    IntVector degree;
    std::size_t index;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Binomial& g = gens[i];
    if (g.nvars() != grading.count()) {
      throw DimensionMismatch("generator arity != number of grading columns");
    }
    if (!g.IsHomogeneous(grading)) {
      throw NotHomogeneous("generator " + FormatBinomial(g, DefaultLabels(g.nvars())) +
                           " is not homogeneous");
    }
    if (g.lead == g.trail) continue;
    IntVector deg = g.DegreeIn(grading);
    items.push_back({Dot(pointed.functional, deg), std::move(deg), i});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.degree < b.degree;
  });

  const TermOrder order = TermOrder::DegRevLex(grading.count());
  std::vector<GradedGenerators> out;
  GroebnerBasis kept_basis;
  kept_basis.order = order;
  for (const Item& item : items) {
    const Binomial& g = gens[item.index];
    if (IdealContains(kept_basis, g)) continue;
    std::vector<Binomial> seed = kept_basis.elements;
    seed.push_back(g);
    kept_basis = Buchberger(seed, order);
    if (out.empty() || out.back().degree != item.degree) {
      out.push_back({item.degree, 0, {}});
    }
    ++out.back().count;
    out.back().generators.push_back(g);
  }
  return out;
}

}  // namespace toricdegen
