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
#include "toricdegen/families.h"

#include <algorithm>
#include <set>
#include <utility>

#include "toricdegen/errors.h"
#include "toricdegen/toric.h"

namespace toricdegen {
namespace {

const std::vector<std::string> kXyz = {"x", "y", "z"};

Monomial Xyz(long long x, long long y, long long z) {
  return Monomial(IntVector{x, y, z});
}

FamilyInstance Interval(std::string name, long long a) {
  FamilyInstance f;
  f.name = std::move(name);
  f.generators = GeneratorMatrix::Numerical({a, a + 1, a + 2});
  f.labels = kXyz;
  return f;
}

}  // namespace

FamilyInstance IntervalEven(long long q) {
  if (q < 1) throw InvalidParams("interval_even needs q >= 1");
  FamilyInstance f = Interval("interval_even(" + std::to_string(q) + ")", 2 * q + 2);
  f.minimal_generators = std::vector<Binomial>{
      Binomial(Xyz(0, 2, 0), Xyz(1, 0, 1)),
      Binomial(Xyz(q + 2, 0, 0), Xyz(0, 0, q + 1))};
  const long long a = 2 * q + 2;
  f.betti = std::vector<IntVector>{{2 * a + 2}, {(q + 2) * a}};
  return f;
}

FamilyInstance IntervalOdd(long long q) {
  if (q < 2) throw InvalidParams("interval_odd needs q >= 2");
  FamilyInstance f = Interval("interval_odd(" + std::to_string(q) + ")", 2 * q);
  f.minimal_generators = std::vector<Binomial>{
      Binomial(Xyz(0, 2, 0), Xyz(1, 0, 1)),
      Binomial(Xyz(q + 1, 0, 0), Xyz(0, 0, q))};
  const long long a = 2 * q;
  f.betti = std::vector<IntVector>{{2 * a + 2}, {(q + 1) * a}};
  std::sort(f.betti->begin(), f.betti->end());
  return f;
}

FamilyInstance PairwiseCoprime(const std::vector<long long>& b) {
  if (b.size() < 2) throw InvalidParams("pairwise_coprime needs at least two b_i");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 2) throw InvalidParams("pairwise_coprime needs every b_i >= 2");
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (Gcd(b[i], b[j]) != 1) {
        throw InvalidParams("b_" + std::to_string(i + 1) + " and b_" +
                            std::to_string(j + 1) + " are not coprime");
      }
    }
  }
  Integer product = 1;
  for (long long v : b) product *= v;
  std::vector<IntVector> cols;
  std::string name = "pairwise_coprime(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    cols.push_back({product / b[i]});
    name += (i ? "," : "") + std::to_string(b[i]);
  }
  FamilyInstance f;
  f.name = name + ")";
  f.generators = GeneratorMatrix(1, std::move(cols));
  f.labels = DefaultLabels(b.size());
  f.betti = std::vector<IntVector>{{product}};
  return f;
}

FamilyInstance AOfM(long long m) {
  if (m < 1) throw InvalidParams("A(m) needs m >= 1");
  FamilyInstance f;
  f.name = "A_of_m(" + std::to_string(m) + ")";
  f.generators = GeneratorMatrix(2, {{1, 0}, {1, 1}, {m, m + 1}});
  f.labels = DefaultLabels(3);
  return f;
}

FamilyInstance Lawrence(const GeneratorMatrix& a) {
  const std::size_t d = a.ambient_dim();
  const std::size_t n = a.count();
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector c = a.column(i);
    c.resize(d + n, 0);
    c[d + i] = 1;
    cols.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < n; ++i) cols.push_back(UnitVector(d + n, d + i));
  FamilyInstance f;
  f.name = "lawrence";
  f.generators = GeneratorMatrix(d + n, std::move(cols));
  for (std::size_t i = 0; i < n; ++i) f.labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) f.labels.push_back("y" + std::to_string(i + 1));
  return f;
}

FamilyInstance CorpusFamily(std::string_view name, const std::vector<long long>& params) {
  auto one = [&]() {
    if (params.size() != 1) {
      throw InvalidParams(std::string(name) + " takes exactly one parameter");
    }
    return params.front();
  };
  if (name == "interval_even") return IntervalEven(one());
  if (name == "interval_odd") return IntervalOdd(one());
  if (name == "pairwise_coprime") return PairwiseCoprime(params);
  if (name == "A_of_m") return AOfM(one());
  throw InvalidParams("unknown family '" + std::string(name) + "'");
}

std::string_view Grob1CaseName(Grob1Case c) {
  switch (c) {
    case Grob1Case::k1: return "1";
    case Grob1Case::k2a: return "2a";
    case Grob1Case::k2b: return "2b";
    case Grob1Case::k3a: return "3a";
    case Grob1Case::k3b: return "3b";
  }
  return "?";
}

std::string Grob1Classification::Tag() const {
  std::string tag(Grob1CaseName(kind));
  if (kind == Grob1Case::k3b) {
    tag += "(n=" + std::to_string(n) + ")";
    if (boundary) tag += " n=q";
  }
  return tag;
}

Grob1Classification ClassifyGrob1(long long q, const IntVector& w) {
  if (q < 1) throw InvalidParams("q must be >= 1");
  if (w.size() != 3) throw DimensionMismatch("w must have three entries");
  if (!IsNonNegative(w) || IsZero(w)) {
    throw InvalidParams("w must be a nonzero vector in N^3");
  }
  const Integer &w1 = w[0], &w2 = w[1], &w3 = w[2];
  Grob1Classification c;
  if (2 * w2 >= w1 + w3) {
    c.kind = Grob1Case::k1;
    c.z_leads = (q + 1) * w3 > (q + 2) * w1;
  } else if ((q + 1) * w3 <= (q + 2) * w1) {
    c.kind = (q + 2) * w3 <= (q + 1) * w1 + 2 * w2 ? Grob1Case::k2a : Grob1Case::k2b;
  } else {
    c.kind = Grob1Case::k3a;
    for (long long i = 0; i <= q; ++i) {
      if ((q + i + 3) * w1 >= 2 * (i + 1) * w2 + (q - i) * w3) {
        c.kind = Grob1Case::k3b;
        c.n = i;
        c.boundary = i == q;
        break;
      }
    }
  }
  return c;
}

std::vector<Binomial> ExpectedGrob1Basis(long long q, const Grob1Classification& c) {
  const Binomial xz_y2(Xyz(1, 0, 1), Xyz(0, 2, 0));
  switch (c.kind) {
    case Grob1Case::k1:
      if (c.z_leads) {
        return {Binomial(Xyz(0, 2, 0), Xyz(1, 0, 1)),
                Binomial(Xyz(0, 0, q + 1), Xyz(q + 2, 0, 0))};
      }
      return {Binomial(Xyz(0, 2, 0), Xyz(1, 0, 1)),
              Binomial(Xyz(q + 2, 0, 0), Xyz(0, 0, q + 1))};
    case Grob1Case::k2a:
      return {xz_y2, Binomial(Xyz(q + 2, 0, 0), Xyz(0, 0, q + 1)),
              Binomial(Xyz(q + 1, 2, 0), Xyz(0, 0, q + 2))};
    case Grob1Case::k2b:
      return {xz_y2, Binomial(Xyz(q + 2, 0, 0), Xyz(0, 0, q + 1)),
              Binomial(Xyz(0, 0, q + 2), Xyz(q + 1, 2, 0))};
    case Grob1Case::k3a:
    case Grob1Case::k3b: {
      std::vector<Binomial> g = {xz_y2, Binomial(Xyz(0, 0, q + 1), Xyz(q + 2, 0, 0))};
      const long long last = c.kind == Grob1Case::k3a ? q + 1 : c.n;
      for (long long i = 0; i < last; ++i) {
        g.emplace_back(Xyz(0, 2 * (i + 1), q - i), Xyz(q + i + 3, 0, 0));
      }
      if (c.kind == Grob1Case::k3b) {
        g.emplace_back(Xyz(q + c.n + 3, 0, 0), Xyz(0, 2 * (c.n + 1), q - c.n));
      }
      return g;
    }
  }
  return {};
}

bool MonomialDegreeCriterion(const std::vector<Binomial>& gens,
                             const GeneratorMatrix& grading) {
  std::set<Monomial> monomials;
  std::set<IntVector> degrees;
  for (const Binomial& g : gens) {
    monomials.insert(g.lead);
    monomials.insert(g.trail);
    if (!degrees.insert(g.DegreeIn(grading)).second) return false;
  }
  for (const Monomial& m1 : monomials) {
    for (const Monomial& m2 : monomials) {
      if (m1 != m2 && m1.Divides(m2)) return false;
    }
  }
  return true;
}

UniquePresentationCheck CheckUniquePresentationFamily(long long q, const IntVector& w) {
  UniquePresentationCheck check;
  check.classification = ClassifyGrob1(q, w);
  const FamilyInstance family = IntervalEven(q);
  const DegenerationContext ctx(SemigroupPresentation(family.generators), w);
  const TermOrder order(w, TieBreak::kDegRevLex);
  check.basis = RefinedGroebnerBasis(ctx, order);

  const std::vector<Binomial> expected = ExpectedGrob1Basis(q, check.classification);
  std::set<Monomial> computed_leads, expected_leads;
  for (const Binomial& g : check.basis.elements) computed_leads.insert(g.lead);
  for (const Binomial& g : expected) expected_leads.insert(g.lead);
  check.shape_matches = check.basis.elements.size() == expected.size() &&
                        computed_leads == expected_leads;

  std::vector<Binomial> degenerated;
  for (const Binomial& g : check.basis.elements) {
    degenerated.push_back(DegenerateBinomial(g, w));
  }
  check.degenerated_betti = BettiElementsFromGenerators(ctx.degenerated(), degenerated);
  check.monomial_degree_criterion =
      MonomialDegreeCriterion(check.degenerated_betti.generators_used, ctx.a_w());
  check.uniquely_presented = check.degenerated_betti.uniquely_presented;
  return check;
}

}  // namespace toricdegen
