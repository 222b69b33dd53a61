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
#include <random>

#include "gtest/gtest.h"
#include "toricdegen/errors.h"
#include "toricdegen/toric.h"

namespace toricdegen {
namespace {

std::vector<Binomial> Parse(const std::vector<std::string>& texts,
                            const std::vector<std::string>& labels) {
  std::vector<Binomial> out;
  for (const std::string& t : texts) out.push_back(ParseBinomial(t, labels));
  return out;
}

const std::vector<std::string> kXyz = {"x", "y", "z"};

GeneratorMatrix RandomConfiguration(std::mt19937_64& rng) {
  const std::size_t d = 1 + rng() % 2, n = 3 + rng() % 2;
  std::vector<IntVector> cols;
  while (cols.size() < n) {
    IntVector c(d);
    for (auto& x : c) x = static_cast<long long>(rng() % 5);
    if (!IsZero(c)) cols.push_back(c);
  }
  return GeneratorMatrix(d, cols);
}

TEST(NormalFormTest, UsesFirstApplicableReducer) {
  // <4,5,6> under a weight making xz and x^3 leading.
  const TermOrder order({1, 0, 0}, TieBreak::kDegRevLex);
  const std::vector<Binomial> basis = Parse({"x*z - y^2", "x^3 - z^2"}, kXyz);
  EXPECT_EQ(FormatMonomial(NormalForm(ParseMonomial("x^3*z", kXyz), basis, order), kXyz),
            "x^2*y^2");
  // z^3 is already standard.
  EXPECT_EQ(NormalForm(ParseMonomial("z^3", kXyz), basis, order), ParseMonomial("z^3", kXyz));
  const auto s = SPolynomial(basis[0], basis[1], order);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(FormatBinomial(*s, kXyz), "x^2*y^2 - z^3");
}

TEST(NormalFormTest, BinomialReducingToZero) {
  const TermOrder order = TermOrder::Lex(3);
  const std::vector<Binomial> basis = Parse({"x - y", "y - z"}, kXyz);
  EXPECT_FALSE(NormalForm(ParseBinomial("x^2 - z^2", kXyz), basis, order).has_value());
  EXPECT_TRUE(NormalForm(ParseBinomial("x^2 - z", kXyz), basis, order).has_value());
}

TEST(BuchbergerTest, ScrollBasisUnderLex) {
  const std::vector<std::string> labels = {"a", "b", "c", "d"};
  const GroebnerBasis gb =
      Buchberger(Parse({"a*c - b^2", "a*d - b*c", "b*d - c^2"}, labels), TermOrder::Lex(4));
  EXPECT_TRUE(gb.reduced);
  std::vector<std::string> got;
  for (const Binomial& g : gb.elements) got.push_back(FormatBinomial(g, labels));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"a*c - b^2", "a*d - b*c", "b*d - c^2"}));
}

// Membership of x^u - x^v in I_A is exactly A u = A v.
TEST(BuchbergerTest, MembershipMatchesFiberOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const GeneratorMatrix a = RandomConfiguration(rng);
    const SemigroupPresentation s(a);
    for (const TermOrder& order : {TermOrder::Lex(a.count()), TermOrder::DegRevLex(a.count())}) {
      const GroebnerBasis gb = Buchberger(ToricIdeal(s), order);
      for (int i = 0; i < 60; ++i) {
        IntVector u(a.count()), v(a.count());
        for (auto& x : u) x = static_cast<long long>(rng() % 4);
        for (auto& x : v) x = static_cast<long long>(rng() % 4);
        if (u == v) continue;
        EXPECT_EQ(IdealContains(gb, Binomial::FromExponents(u, v)), a.Apply(u) == a.Apply(v));
      }
    }
  }
}

TEST(BuchbergerTest, OutputIsReducedGroebnerBasis) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    const GeneratorMatrix a = RandomConfiguration(rng);
    IntVector w(a.count());
    for (auto& x : w) x = static_cast<long long>(rng() % 5);
    const TermOrder order(w, TieBreak::kLex);
    const GroebnerBasis gb = Buchberger(ToricIdeal(SemigroupPresentation(a)), order);
    EXPECT_TRUE(IsGroebnerBasis(gb.elements, order));
    for (const Binomial& g : gb.elements) {
      EXPECT_TRUE(order.Greater(g.lead, g.trail));
      for (const Binomial& h : gb.elements) {
        if (&g == &h) continue;
        EXPECT_FALSE(h.lead.Divides(g.lead));
        EXPECT_FALSE(h.lead.Divides(g.trail));
      }
    }
  }
}

TEST(BuchbergerTest, IndependentOfGeneratorOrder) {
  std::vector<Binomial> gens = Parse({"x^5 - y^3", "y^3 - z^2", "x^5 - z^2"}, {"x", "y", "z"});
  const TermOrder order = TermOrder::DegRevLex(3);
  const GroebnerBasis first = Buchberger(gens, order);
  std::reverse(gens.begin(), gens.end());
  const GroebnerBasis second = Buchberger(gens, order);
  EXPECT_EQ(first.elements, second.elements);
  EXPECT_EQ(ReduceBasis(first).elements, first.elements);
}

TEST(IdealTest, EqualityAndContainment) {
  const auto a = Parse({"x^5 - y^3", "y^3 - z^2"}, kXyz);
  const auto b = Parse({"x^5 - z^2", "y^3 - z^2"}, kXyz);
  const auto c = Parse({"x^5 - z^2"}, kXyz);
  EXPECT_TRUE(IdealEqual(a, b, 3));
  EXPECT_TRUE(IdealEqual(b, a, 3));
  EXPECT_FALSE(IdealEqual(a, c, 3));
  EXPECT_TRUE(IdealEqual({}, {}, 3));
}

TEST(SaturationTest, RecoversTheScrollQuadric) {
  const std::vector<std::string> labels = {"a", "b", "c", "d"};
  const auto lattice = Parse({"a*c - b^2", "b*d - c^2"}, labels);
  const auto toric = Parse({"a*c - b^2", "a*d - b*c", "b*d - c^2"}, labels);
  EXPECT_FALSE(IdealEqual(lattice, toric, 4));
  EXPECT_TRUE(IdealEqual(SaturateVariables(lattice, 4), toric, 4));
}

TEST(SaturationTest, WithoutPositiveGrading) {
  const auto gens = Parse({"x*y - x*z"}, kXyz);
  EXPECT_TRUE(IdealEqual(SaturateVariables(gens, 3), Parse({"y - z"}, kXyz), 3));
  EXPECT_FALSE(PositiveGrading(Parse({"x - x^2"}, kXyz), 3).has_value());
  const auto grading = PositiveGrading(Parse({"x^5 - y^3", "y^3 - z^2"}, kXyz), 3);
  ASSERT_TRUE(grading.has_value());
  EXPECT_EQ(5 * (*grading)[0], 3 * (*grading)[1]);
  EXPECT_EQ(3 * (*grading)[1], 2 * (*grading)[2]);
}

TEST(MinimalGeneratorsTest, DropsRedundantGenerators) {
  const GeneratorMatrix a = GeneratorMatrix::Numerical({6, 10, 15});
  const auto gens = Parse({"x^5 - z^2", "x^5 - y^3", "y^3 - z^2", "x^10 - z^4"}, kXyz);
  const std::vector<GradedGenerators> mins = MinimalGenerators(gens, a);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0].degree, IntVector{30});
  EXPECT_EQ(mins[0].count, 2u);
  EXPECT_THROW(MinimalGenerators(Parse({"x - y"}, kXyz), a), NotHomogeneous);
}

}  // namespace
}  // namespace toricdegen
