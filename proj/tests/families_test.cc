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

#include <set>

#include "gtest/gtest.h"
#include "toricdegen/errors.h"
#include "toricdegen/toric.h"

namespace toricdegen {
namespace {

std::vector<IntVector> WeightGrid(long long max) {
  std::vector<IntVector> out;
  for (long long a = 0; a <= max; ++a) {
    for (long long b = 0; b <= max; ++b) {
      for (long long c = 0; c <= max; ++c) {
        if (a + b + c > 0) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::multiset<IntVector> Leads(const std::vector<Binomial>& gens) {
  std::multiset<IntVector> out;
  for (const Binomial& g : gens) out.insert(g.lead.exponents());
  return out;
}

TEST(FamiliesTest, Generators) {
  EXPECT_EQ(IntervalEven(1).generators, GeneratorMatrix::Numerical({4, 5, 6}));
  EXPECT_EQ(IntervalOdd(3).generators, GeneratorMatrix::Numerical({6, 7, 8}));
  EXPECT_EQ(PairwiseCoprime({2, 3, 5}).generators, GeneratorMatrix::Numerical({15, 10, 6}));
  EXPECT_EQ(AOfM(3).generators, GeneratorMatrix::FromColumns({{1, 0}, {1, 1}, {3, 4}}));
  EXPECT_EQ(CorpusFamily("A_of_m", {3}).generators, AOfM(3).generators);
  EXPECT_THROW(CorpusFamily("nope", {1}), InvalidParams);
  EXPECT_THROW(PairwiseCoprime({2, 4}), InvalidParams);
  EXPECT_THROW(IntervalOdd(1), InvalidParams);
}

TEST(FamiliesTest, StatedMinimalGeneratorsGenerateTheToricIdeal) {
  for (long long q = 1; q <= 4; ++q) {
    for (const FamilyInstance& f : {IntervalEven(q), IntervalOdd(q + 1)}) {
      ASSERT_TRUE(f.minimal_generators.has_value());
      EXPECT_TRUE(IdealEqual(*f.minimal_generators,
                             ToricIdeal(SemigroupPresentation(f.generators)), 3))
          << f.name;
    }
  }
}

// Graver basis of A by brute force: conformally minimal kernel vectors.
std::vector<IntVector> GraverByBox(const GeneratorMatrix& a, long long box) {
  std::vector<IntVector> kernel;
  IntVector u(a.count(), -box);
  while (true) {
    if (!IsZero(u) && IsZero(a.Apply(u))) kernel.push_back(u);
    std::size_t i = 0;
    while (i < u.size() && u[i] == box) u[i++] = -box;
    if (i == u.size()) break;
    ++u[i];
  }
  auto conformal_below = [](const IntVector& v, const IntVector& u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (v[i] * u[i] < 0 || abs(v[i]) > abs(u[i])) return false;
    }
    return true;
  };
  std::vector<IntVector> graver;
  for (const IntVector& u : kernel) {
    bool primitive = true;
    for (const IntVector& v : kernel) {
      if (v != u && conformal_below(v, u)) primitive = false;
    }
    if (primitive) graver.push_back(u);
  }
  return graver;
}

TEST(LawrenceTest, IdealIsGeneratedByGraverPairs) {
  for (const GeneratorMatrix& a :
       {GeneratorMatrix::Numerical({1, 2}), GeneratorMatrix::Numerical({2, 3}),
        GeneratorMatrix::Numerical({1, 2, 3}),
        GeneratorMatrix::FromColumns({{1, 0}, {1, 1}, {1, 2}})}) {
    const std::size_t n = a.count();
    std::vector<Binomial> expected;
    for (const IntVector& u : GraverByBox(a, 4)) {
      IntVector lead(2 * n, 0), trail(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] > 0) {
          lead[i] = u[i];
          trail[n + i] = u[i];
        } else {
          trail[i] = -u[i];
          lead[n + i] = -u[i];
        }
      }
      expected.push_back(Binomial::FromExponents(lead, trail));
    }
    const SemigroupPresentation lawrence(Lawrence(a).generators);
    EXPECT_TRUE(IdealEqual(ToricIdeal(lawrence), expected, 2 * n));
    EXPECT_TRUE(BettiElements(lawrence).uniquely_presented);
  }
}

TEST(Grob1Test, ClassificationOfHandPickedWeights) {
  EXPECT_EQ(ClassifyGrob1(1, {1, 3, 1}).kind, Grob1Case::k1);
  EXPECT_EQ(ClassifyGrob1(1, {1, 0, 0}).kind, Grob1Case::k2a);
  EXPECT_EQ(ClassifyGrob1(1, {3, 0, 3}).kind, Grob1Case::k2b);
  EXPECT_EQ(ClassifyGrob1(2, {0, 1, 3}).kind, Grob1Case::k3a);
  const Grob1Classification c = ClassifyGrob1(2, {1, 1, 3});
  EXPECT_EQ(c.kind, Grob1Case::k3b);
  EXPECT_EQ(c.n, 2);
  EXPECT_TRUE(c.boundary);
  EXPECT_EQ(c.Tag(), "3b(n=2) n=q");
  EXPECT_THROW(ClassifyGrob1(1, {0, 0, 0}), InvalidParams);
  EXPECT_THROW(ClassifyGrob1(0, {1, 1, 1}), InvalidParams);
}

// Every case except 2(a) predicts the leading monomials of the reduced basis.
// In case 2(a) the S-pair of xz - y^2 and x^{q+1}y^2 - z^{q+2} does not
// reduce to zero, so the listed set is not a Groebner basis.
TEST(Grob1Test, ListedBasesAgainstBuchberger) {
  for (long long q = 1; q <= 3; ++q) {
    const SemigroupPresentation s(IntervalEven(q).generators);
    const std::vector<Binomial> gens = ToricIdeal(s);
    for (const IntVector& w : WeightGrid(5)) {
      const TermOrder order(w, TieBreak::kDegRevLex);
      const Grob1Classification c = ClassifyGrob1(q, w);
      const std::vector<Binomial> listed = ExpectedGrob1Basis(q, c);
      if (c.kind == Grob1Case::k2a) {
        EXPECT_FALSE(IsGroebnerBasis(listed, order)) << q << ToString(w);
        continue;
      }
      EXPECT_EQ(Leads(Buchberger(gens, order).elements), Leads(listed))
          << "q=" << q << " w=" << ToString(w) << " " << c.Tag();
    }
  }
}

TEST(Grob1Test, DegenerationsAreUniquelyPresented) {
  for (long long q = 1; q <= 2; ++q) {
    for (const IntVector& w : WeightGrid(4)) {
      const UniquePresentationCheck r = CheckUniquePresentationFamily(q, w);
      EXPECT_TRUE(r.uniquely_presented) << q << ToString(w);
      EXPECT_EQ(r.shape_matches, r.classification.kind != Grob1Case::k2a);
    }
  }
}

TEST(MonomialDegreeCriterionTest, Examples) {
  const FamilyInstance f = IntervalOdd(3);
  EXPECT_TRUE(MonomialDegreeCriterion(*f.minimal_generators, f.generators));
  const std::vector<std::string> labels = DefaultLabels(3);
  const std::vector<Binomial> gens = {ParseBinomial("x1^5 - x2^3", labels),
                                      ParseBinomial("x2^3 - x3^2", labels)};
  EXPECT_FALSE(MonomialDegreeCriterion(gens, GeneratorMatrix::Numerical({6, 10, 15})));
}

}  // namespace
}  // namespace toricdegen
