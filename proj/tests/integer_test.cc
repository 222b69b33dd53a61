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
#include "toricdegen/integer.h"

#include <random>

#include "gtest/gtest.h"
#include "toricdegen/errors.h"

namespace toricdegen {
namespace {

TEST(IntegerTest, ParseRoundTrip) {
  EXPECT_EQ(ParseInteger("0"), 0);
  EXPECT_EQ(ParseInteger("-17"), -17);
  EXPECT_EQ(ParseInteger("+5"), 5);
  const std::string big = "123456789012345678901234567890";
  EXPECT_EQ(ParseInteger(big).str(), big);
}

TEST(IntegerTest, ParseRejectsGarbage) {
  EXPECT_THROW(ParseInteger(""), ParseError);
  EXPECT_THROW(ParseInteger("-"), ParseError);
  EXPECT_THROW(ParseInteger("12a"), ParseError);
  EXPECT_THROW(ParseInteger(" 1"), ParseError);
}

TEST(IntegerTest, VectorArithmetic) {
  const IntVector a = {1, -2, 3};
  const IntVector b = {4, 5, -6};
  EXPECT_EQ(Add(a, b), (IntVector{5, 3, -3}));
  EXPECT_EQ(Subtract(a, b), (IntVector{-3, -7, 9}));
  EXPECT_EQ(Scale(-2, a), (IntVector{-2, 4, -6}));
  EXPECT_EQ(Dot(a, b), 4 - 10 - 18);
  EXPECT_TRUE(IsZero(ZeroVector(3)));
  EXPECT_FALSE(IsNonNegative(a));
  EXPECT_EQ(UnitVector(3, 1), (IntVector{0, 1, 0}));
  EXPECT_EQ(ToString(a), "(1,-2,3)");
  EXPECT_THROW(Add(a, IntVector{1}), DimensionMismatch);
}

TEST(IntegerTest, GcdLcmMatchEuclid) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    long long a = static_cast<long long>(rng() % 2000) - 1000;
    long long b = static_cast<long long>(rng() % 2000) - 1000;
    long long x = a < 0 ? -a : a, y = b < 0 ? -b : b;
    while (y != 0) {
      const long long r = x % y;
      x = y;
      y = r;
    }
    EXPECT_EQ(Gcd(a, b), x) << a << " " << b;
    if (x != 0) {
      EXPECT_EQ(Lcm(a, b), (a < 0 ? -a : a) / x * (b < 0 ? -b : b));
    }
  }
}

TEST(IntegerTest, BinomialCoefficientMatchesPascal) {
  std::vector<std::vector<Integer>> pascal(40);
  for (int n = 0; n < 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (int k = 0; k <= n; ++k) EXPECT_EQ(BinomialCoefficient(n, k), pascal[n][k]);
    EXPECT_EQ(BinomialCoefficient(n, n + 1), 0);
    EXPECT_EQ(BinomialCoefficient(n, -1), 0);
  }
}

}  // namespace
}  // namespace toricdegen
