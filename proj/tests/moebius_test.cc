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
#include "toricdegen/moebius.h"

#include <functional>
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "toricdegen/errors.h"
#include "toricdegen/families.h"

namespace toricdegen {
namespace {

SemigroupPresentation Numerical(const std::vector<long long>& a) {
  return SemigroupPresentation(GeneratorMatrix::Numerical(a));
}

// Elements of NA reachable as u·A with every u_i <= cap.
std::set<IntVector> ElementsByBox(const GeneratorMatrix& a, long long cap) {
  std::set<IntVector> out;
  IntVector u(a.count(), 0);
  while (true) {
    out.insert(a.Apply(u));
    std::size_t i = 0;
    while (i < u.size() && u[i] == cap) u[i++] = 0;
    if (i == u.size()) break;
    ++u[i];
  }
  return out;
}

// Hall's theorem: μ(0, z) = Σ_k (-1)^k (number of chains 0 < z_1 < ... < z_k = z).
Integer MuByChains(const std::set<IntVector>& s, const IntVector& z) {
  const IntVector zero(z.size(), 0);
  if (s.count(z) == 0) return 0;
  std::vector<IntVector> interval;
  for (const IntVector& y : s) {
    if (s.count(Subtract(z, y)) > 0) interval.push_back(y);
  }
  // Sorted lexicographically, which for these semigroups refines <=_S only
  // through the chain condition below, so count chains by memoised DFS.
  std::map<IntVector, std::map<int, Integer>> chains;  // y -> length -> count
  std::function<const std::map<int, Integer>&(const IntVector&)> from =
      [&](const IntVector& y) -> const std::map<int, Integer>& {
    auto it = chains.find(y);
    if (it != chains.end()) return it->second;
    std::map<int, Integer> counts;
    if (y == z) {
      counts[0] = 1;
    } else {
      for (const IntVector& x : interval) {
        const IntVector step = Subtract(x, y);
        if (x != y && s.count(step) > 0 && s.count(Subtract(z, x)) > 0) {
          for (const auto& [len, c] : from(x)) counts[len + 1] += c;
        }
      }
    }
    return chains[y] = counts;
  };
  Integer mu = 0;
  for (const auto& [len, c] : from(zero)) mu += (len % 2 == 0) ? c : Integer(-c);
  return mu;
}

TEST(MuBruteForceTest, SmallValues) {
  const SemigroupPresentation s = Numerical({2, 3});
  const std::vector<int> expected = {1, 0, -1, -1, 0, 1, 1};
  for (long long z = 0; z < 7; ++z) EXPECT_EQ(MuBruteForce(s, {z}), expected[z]) << z;
  EXPECT_EQ(MuBruteForce(s, {-3}), 0);
  EXPECT_THROW(MuBruteForce(s, {1, 2}), DimensionMismatch);
}

TEST(MuBruteForceTest, MatchesChainCounting) {
  for (const auto& a : std::vector<std::vector<long long>>{{2, 3}, {3, 5}, {4, 6, 9}, {3, 4, 5}}) {
    const SemigroupPresentation s = Numerical(a);
    const std::set<IntVector> elems = ElementsByBox(s.generators(), 12);
    for (long long z = 0; z <= 24; ++z) {
      EXPECT_EQ(MuBruteForce(s, {z}), MuByChains(elems, {z})) << z;
    }
  }
  const SemigroupPresentation scroll(GeneratorMatrix::FromColumns({{1, 0}, {1, 1}, {1, 2}}));
  const std::set<IntVector> elems = ElementsByBox(scroll.generators(), 6);
  for (long long x = 0; x <= 4; ++x) {
    for (long long y = 0; y <= 2 * x; ++y) {
      EXPECT_EQ(MuBruteForce(scroll, {x, y}), MuByChains(elems, {x, y}));
    }
  }
}

TEST(MoebiusTableTest, MatchesBruteForce) {
  const SemigroupPresentation s = Numerical({4, 6, 9});
  const MoebiusTable table(s, 50);
  for (long long z = 0; z <= 50; ++z) EXPECT_EQ(table.Mu({z}), MuBruteForce(s, {z}));
  EXPECT_THROW(table.Mu({51}), InvalidParams);
}

TEST(MoebiusContextTest, Obstructions) {
  EXPECT_TRUE(MoebiusContext(Numerical({15, 10, 6})).closed_formula_obstruction().empty());
  EXPECT_FALSE(MoebiusContext(Numerical({4, 6, 9})).closed_formula_obstruction().empty());
  EXPECT_FALSE(MoebiusContext(Numerical({4, 6})).closed_formula_obstruction().empty());
  EXPECT_FALSE(MoebiusContext(Numerical({1, -1})).closed_formula_obstruction().empty());
  const MoebiusContext uneven(Numerical({15, 10, 6}), {1, 1, 1});
  EXPECT_FALSE(uneven.degeneration_obstruction().empty());
  EXPECT_FALSE(uneven.d_w().has_value());
  EXPECT_THROW(MuDegeneration(uneven, {30}, 2), HypothesisViolated);
  EXPECT_THROW(MuClosed(MoebiusContext(Numerical({4, 6, 9})), {12}), HypothesisViolated);
}

TEST(AzTest, SubsetsOfTwoThree) {
  const MoebiusContext ctx(Numerical({2, 3}));
  ASSERT_EQ(ctx.unique_betti(), IntVector{6});
  auto subsets = [&](long long z) {
    std::vector<std::pair<std::vector<std::size_t>, Integer>> out;
    for (const SubsetWitness& w : Az(ctx, {z})) out.emplace_back(w.subset, w.k);
    return out;
  };
  using Entry = std::pair<std::vector<std::size_t>, Integer>;
  EXPECT_EQ(subsets(5), (std::vector<Entry>{{{0, 1}, 0}}));
  EXPECT_EQ(subsets(6), (std::vector<Entry>{{{}, 1}}));
  EXPECT_EQ(subsets(8), (std::vector<Entry>{{{0}, 1}}));
  EXPECT_TRUE(subsets(4).empty());
  EXPECT_THROW(Az(ctx, {5}, 1), LimitExceeded);
}

TEST(MuClosedTest, MatchesBruteForce) {
  for (const auto& b : std::vector<std::vector<long long>>{{2, 3}, {2, 5}, {2, 3, 5}, {3, 4, 5}}) {
    const SemigroupPresentation s(PairwiseCoprime(b).generators);
    const MoebiusContext ctx(s);
    for (long long z = 0; z <= 70; ++z) EXPECT_EQ(MuClosed(ctx, {z}), MuBruteForce(s, {z})) << z;
  }
}

TEST(MuDegenerationTest, MatchesChainCounting) {
  const SemigroupPresentation s(PairwiseCoprime({2, 3}).generators);
  const MoebiusContext ctx(s, {3, 2});
  ASSERT_EQ(ctx.d_w(), Integer(6));
  const std::set<IntVector> elems = ElementsByBox(ctx.degenerated()->generators(), 8);
  for (long long z = 0; z <= 20; ++z) {
    for (long long l = 0; l <= 20; ++l) {
      EXPECT_EQ(MuDegeneration(ctx, {z}, l), MuByChains(elems, {z, l})) << z << "," << l;
    }
  }
}

TEST(BzTest, BoundedByAz) {
  const SemigroupPresentation s(PairwiseCoprime({2, 3, 5}).generators);
  const MoebiusContext ctx(s, {15, 10, 6});
  for (long long z = 0; z <= 60; ++z) {
    const std::size_t az = Az(ctx, {z}).size();
    for (long long l = 0; l <= 70; ++l) EXPECT_LE(Bz(ctx, {z}, l).size(), az);
  }
}

}  // namespace
}  // namespace toricdegen
