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
#include "toricdegen/semigroup.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "toricdegen/errors.h"
#include "toricdegen/families.h"

namespace toricdegen {
namespace {

SemigroupPresentation Numerical(const std::vector<long long>& a) {
  return SemigroupPresentation(GeneratorMatrix::Numerical(a));
}

// in_s[z] for 0 <= z <= bound, by dynamic programming.
std::vector<bool> NumericalMembers(const std::vector<long long>& a, long long bound) {
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (long long z = 1; z <= bound; ++z) {
    for (long long g : a) {
      if (g <= z && in[z - g]) in[z] = true;
    }
  }
  return in;
}

// All u in N^n with A u = b, by enumerating a box.
std::vector<IntVector> BruteFiber(const GeneratorMatrix& a, const IntVector& b, long long cap) {
  std::vector<IntVector> out;
  IntVector u(a.count(), 0);
  while (true) {
    if (a.Apply(u) == b) out.push_back(u);
    std::size_t i = 0;
    while (i < u.size() && u[i] == cap) u[i++] = 0;
    if (i == u.size()) break;
    ++u[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ComponentsOracle(const std::vector<IntVector>& points) {
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        if (points[i][k] > 0 && points[j][k] > 0) {
          parent[find(i)] = find(j);
          break;
        }
      }
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) count += find(i) == i;
  return count;
}

TEST(MemberTest, MatchesDynamicProgramming) {
  for (const auto& a : std::vector<std::vector<long long>>{{2, 3}, {6, 10, 15}, {5, 7, 11}, {4, 6, 9}}) {
    const SemigroupPresentation s = Numerical(a);
    const std::vector<bool> in = NumericalMembers(a, 120);
    for (long long z = 0; z <= 120; ++z) {
      const auto u = Member(s, {z});
      ASSERT_EQ(u.has_value(), in[z]) << z;
      if (u) {
        EXPECT_TRUE(IsNonNegative(*u));
        EXPECT_EQ(s.generators().Apply(*u), IntVector{z});
      }
    }
  }
}

TEST(MemberTest, RejectsBadInput) {
  EXPECT_THROW(Member(Numerical({1, -1}), {1}), NotPointed);
  EXPECT_THROW(Member(Numerical({2, 3}), {1, 2}), DimensionMismatch);
  EXPECT_FALSE(Member(Numerical({2, 3}), {-4}).has_value());
}

TEST(FiberTest, MatchesBoxEnumeration) {
  const GeneratorMatrix a = GeneratorMatrix::FromColumns({{1, 0}, {1, 1}, {1, 2}, {2, 3}});
  const SemigroupPresentation s(a);
  for (long long x = 0; x <= 5; ++x) {
    for (long long y = 0; y <= 8; ++y) {
      const Fiber f = ComputeFiber(s, {x, y});
      EXPECT_EQ(f.points, BruteFiber(a, {x, y}, 8)) << x << "," << y;
    }
  }
  EXPECT_THROW(ComputeFiber(Numerical({1, 2}), {60}, 5), LimitExceeded);
}

TEST(ElementsUpToTest, SortedAndComplete) {
  const std::vector<long long> a = {5, 7, 11};
  const std::vector<IntVector> elems = ElementsUpTo(Numerical(a), 60);
  const std::vector<bool> in = NumericalMembers(a, 60);
  std::vector<IntVector> expected;
  for (long long z = 0; z <= 60; ++z) {
    if (in[z]) expected.push_back({z});
  }
  EXPECT_EQ(elems, expected);
}

TEST(BettiTest, KnownNumericalSemigroups) {
  const BettiReport r = BettiElements(Numerical({6, 10, 15}));
  EXPECT_EQ(r.betti, std::vector<IntVector>{{30}});
  EXPECT_EQ(r.beta1_counts.at({30}), 2u);
  EXPECT_FALSE(r.uniquely_presented);

  const BettiReport r2 = BettiElements(Numerical({4, 6, 9}));
  EXPECT_EQ(r2.betti, (std::vector<IntVector>{{12}, {18}}));
  EXPECT_EQ(r2.betti_minimal, std::vector<IntVector>{{12}});
  EXPECT_FALSE(r2.uniquely_presented);

  const BettiReport r3 = BettiElements(Numerical({3, 4, 5}));
  EXPECT_EQ(r3.betti, (std::vector<IntVector>{{8}, {9}, {10}}));
  EXPECT_EQ(r3.betti_minimal, r3.betti);
  EXPECT_TRUE(r3.uniquely_presented);
}

// β₁ at b equals (number of components of the fiber graph) - 1.
TEST(BettiTest, FiberGraphCriterion) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> a;
    while (a.size() < 3) {
      const long long g = 3 + static_cast<long long>(rng() % 12);
      if (std::find(a.begin(), a.end(), g) == a.end()) a.push_back(g);
    }
    const SemigroupPresentation s = Numerical(a);
    const BettiReport r = BettiElements(s);
    Integer top = 0;
    for (const IntVector& b : r.betti) top = std::max(top, b[0]);
    for (const IntVector& z : ElementsUpTo(s, top)) {
      const std::vector<IntVector> fiber = BruteFiber(s.generators(), z, 40);
      const std::size_t expected = ComponentsOracle(fiber) - 1;
      const std::size_t got = r.IsBetti(z) ? r.beta1_counts.at(z) : 0;
      EXPECT_EQ(got, expected) << ToString(z);
      EXPECT_EQ(FiberGraphComponents(Fiber{z, fiber}) - 1, expected);
    }
  }
}

TEST(BettiTest, UniquePresentationAgreesWithDefinition) {
  for (const auto& a : std::vector<std::vector<long long>>{{3, 4, 5}, {6, 7, 8}, {4, 6, 9}, {5, 6, 7}, {2, 5}}) {
    const BettiReport r = BettiElements(Numerical(a));
    bool all_one = true;
    for (const auto& [b, c] : r.beta1_counts) all_one = all_one && c == 1;
    EXPECT_EQ(r.uniquely_presented, all_one && r.betti == r.betti_minimal);
  }
}

TEST(InclusionTest, ExampleLifts) {
  const DegenerationContext ctx(Numerical({6, 10, 15}), {1, 1, 1});
  const InclusionReport r = CheckTheoremInclusion(ctx);
  EXPECT_EQ(r.lambdas.at({30}), (std::vector<Integer>{3, 5}));
  EXPECT_TRUE(r.extra.empty());

  const DegenerationContext scroll(
      SemigroupPresentation(GeneratorMatrix::FromColumns({{1, 0}, {1, 1}, {1, 2}, {1, 3}})),
      {3, 7, 2, 5});
  const InclusionReport r2 = CheckTheoremInclusion(scroll);
  EXPECT_EQ(r2.extra, (std::vector<IntVector>{{3, 6, 13}}));
  EXPECT_EQ(r2.lambdas.at({2, 2}), std::vector<Integer>{14});
}

TEST(SaturationTest, NumericalSemigroupsWithGapsAreNotSaturated) {
  const SaturationReport r = IsSaturated(Numerical({2, 3}));
  EXPECT_FALSE(r.saturated);
  EXPECT_EQ(r.witness, IntVector{1});
  EXPECT_TRUE(IsSaturated(Numerical({1, 5})).saturated);
}

TEST(SaturationTest, AOfMDegenerations) {
  for (long long m = 1; m <= 5; ++m) {
    const SemigroupPresentation s(AOfM(m).generators);
    EXPECT_TRUE(IsSaturated(s).saturated);
    const DegenerationContext ctx(s, {1, 1, 1});
    const SaturationReport r = IsSaturated(ctx.degenerated());
    EXPECT_EQ(r.saturated, m <= 2) << m;
    if (m >= 3) {
      EXPECT_EQ(r.witness, (IntVector{2, 2, 1}));
      EXPECT_FALSE(Member(ctx.degenerated(), {2, 2, 1}).has_value());
      EXPECT_TRUE(ConeMember({2, 2, 1}, ctx.a_w()).member);
    }
  }
}

TEST(SaturationTest, ZonotopeDecisionMatchesBall) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntVector> cols;
    while (cols.size() < 3) {
      IntVector c = {static_cast<long long>(rng() % 4), static_cast<long long>(rng() % 4)};
      if (!IsZero(c)) cols.push_back(c);
    }
    const SemigroupPresentation s(GeneratorMatrix(2, cols));
    EXPECT_EQ(IsSaturated(s).saturated, SaturationByBall(s).saturated);
  }
}

// Smallest a in S with a + c in S for 0 <= c <= sum of generators.
long long ApproximationOracle(const std::vector<long long>& a) {
  const long long sum = std::accumulate(a.begin(), a.end(), 0LL);
  const std::vector<bool> in = NumericalMembers(a, 2000);
  for (long long x = 0;; ++x) {
    if (!in[x]) continue;
    bool ok = true;
    for (long long c = 0; c <= sum && ok; ++c) ok = in[x + c];
    if (ok) return x;
  }
}

TEST(ApproximationTest, MatchesNumericalOracle) {
  for (const auto& a : std::vector<std::vector<long long>>{{2, 3}, {6, 10, 15}, {3, 5}, {5, 7, 11}, {1, 4}}) {
    EXPECT_EQ(ApproximationElement(Numerical(a)), IntVector{ApproximationOracle(a)});
  }
}

TEST(ApproximationTest, CertificateCoversTheZonotope) {
  for (const IntVector& w : {IntVector{1, 1, 1}, IntVector{0, 3, 1}, IntVector{7, 0, 2}}) {
    const DegenerationContext ctx(Numerical({6, 10, 15}), w);
    const IntVector a = ApproximationElement(ctx.base());
    const ApproximationCertificate cert = ApproxDegeneration(ctx, a);
    EXPECT_EQ(cert.a, a);
    IntVector shift = a;
    shift.push_back(cert.delta);
    for (const IntVector& c : ZonotopePoints(ctx.a_w())) {
      EXPECT_TRUE(Member(ctx.degenerated(), Add(shift, c)).has_value()) << ToString(c);
    }
    EXPECT_FALSE(SampleCertificate(ctx, cert, 100, 5).has_value());
    for (const ZonotopeCase& z : cert.per_point) {
      EXPECT_TRUE(z.tag == "1" || z.tag == "2.1" || z.tag == "2.2");
    }
  }
}

TEST(ApproximationTest, RejectsNonApproximation) {
  const DegenerationContext ctx(Numerical({2, 3}), {1, 1});
  EXPECT_THROW(ApproxDegeneration(ctx, {0}), InvalidParams);
}

TEST(FiberGraphTest, ExampleFiber) {
  const DegenerationContext ctx(Numerical({6, 10, 15}), {1, 1, 1});
  const Fiber f = ComputeFiber(ctx.degenerated(), {30, 3});
  EXPECT_EQ(f.points, (std::vector<IntVector>{{0, 0, 2, 1}, {0, 3, 0, 0}}));
  EXPECT_EQ(FiberGraphComponents(f), 2u);
}

}  // namespace
}  // namespace toricdegen
