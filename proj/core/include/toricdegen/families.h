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
#ifndef TORICDEGEN_FAMILIES_H_
#define TORICDEGEN_FAMILIES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricdegen/binomial.h"
#include "toricdegen/groebner.h"
#include "toricdegen/integer.h"
#include "toricdegen/lattice.h"
#include "toricdegen/semigroup.h"

namespace toricdegen {

struct FamilyInstance {
  std::string name;
  GeneratorMatrix generators;
  std::vector<std::string> labels;
  // Known facts about the family, when available.
  std::optional<std::vector<Binomial>> minimal_generators;
  std::optional<std::vector<IntVector>> betti;
};

// <a, a+1, a+2> with a = 2q + 2, q >= 1. Variables x, y, z.
FamilyInstance IntervalEven(long long q);
// <a, a+1, a+2> with a = 2q, q >= 2.
FamilyInstance IntervalOdd(long long q);
// a_i = prod_{j != i} b_j for pairwise coprime b_j >= 2.
FamilyInstance PairwiseCoprime(const std::vector<long long>& b);
// {(1,0), (1,1), (m, m+1)}, m >= 1.
FamilyInstance AOfM(long long m);
// The configuration whose toric ideal is the Lawrence ideal of A:
// columns (a_i, e_i) for the x variables and (0, e_i) for the y variables.
FamilyInstance Lawrence(const GeneratorMatrix& a);

// Dispatch by family name: "interval_even", "interval_odd",
// "pairwise_coprime", "A_of_m". Throws InvalidParams.
FamilyInstance CorpusFamily(std::string_view name, const std::vector<long long>& params);

enum class Grob1Case { k1, k2a, k2b, k3a, k3b };
std::string_view Grob1CaseName(Grob1Case c);

struct Grob1Classification {
  Grob1Case kind = Grob1Case::k1;
  // Index of the first failing inequality in case 3(b).
  long long n = 0;
  // Case 3(b) with n = q.
  bool boundary = false;
  // Case 1 with z^{q+1} heavier than x^{q+2}.
  bool z_leads = false;

  std::string Tag() const;
};

// Case split for <a, a+1, a+2>, a = 2q + 2, under the w-degrevlex order.
// Throws InvalidParams for q < 1, w = 0 or a negative weight.
Grob1Classification ClassifyGrob1(long long q, const IntVector& w);
// The Groebner basis listed for the case, leading monomials first.
std::vector<Binomial> ExpectedGrob1Basis(long long q, const Grob1Classification& c);

struct UniquePresentationCheck {
  Grob1Classification classification;
  GroebnerBasis basis;
  bool shape_matches = false;
  // The monomials of the minimal generators of I_{A_w} minimally generate
  // their ideal, and the generator degrees are pairwise distinct.
  bool monomial_degree_criterion = false;
  BettiReport degenerated_betti;
  bool uniquely_presented = false;
};

UniquePresentationCheck CheckUniquePresentationFamily(long long q, const IntVector& w);

// Criterion for unique presentation from the monomials of a binomial
// generating set graded by `grading`.
bool MonomialDegreeCriterion(const std::vector<Binomial>& gens,
                             const GeneratorMatrix& grading);

}  // namespace toricdegen

#endif  // TORICDEGEN_FAMILIES_H_
