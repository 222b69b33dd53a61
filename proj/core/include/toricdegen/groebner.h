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
#ifndef TORICDEGEN_GROEBNER_H_
#define TORICDEGEN_GROEBNER_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "toricdegen/binomial.h"
#include "toricdegen/lattice.h"

namespace toricdegen {

struct GroebnerBasis {
  std::vector<Binomial> elements;
  TermOrder order;
  bool reduced = false;

  std::vector<Monomial> LeadingMonomials() const;
};

// Fully reduces a monomial modulo the leading terms of `basis`, always using
// the first applicable element in list order. The result is a monomial; it
// is the standard monomial when `basis` is a Groebner basis.
Monomial NormalForm(const Monomial& m, const std::vector<Binomial>& basis,
                    const TermOrder& order);
// Normal form of x^lead - x^trail: both terms reduced, then re-oriented.
// nullopt means the binomial reduced to zero.
std::optional<Binomial> NormalForm(const Binomial& b,
                                   const std::vector<Binomial>& basis,
                                   const TermOrder& order);

// The S-binomial of two oriented binomials; nullopt when it vanishes.
std::optional<Binomial> SPolynomial(const Binomial& f, const Binomial& g,
                                    const TermOrder& order);

// Buchberger's algorithm specialised to pure difference binomials: pairs
// are processed by increasing lcm (normal strategy) and pairs with coprime
// leading monomials are skipped. Returns the reduced basis.
GroebnerBasis Buchberger(const std::vector<Binomial>& gens,
                         const TermOrder& order);

// Unique reduced Groebner basis from any Groebner basis of the same ideal.
GroebnerBasis ReduceBasis(const GroebnerBasis& basis);

// Exhaustive check that every S-binomial reduces to zero (no criteria).
bool IsGroebnerBasis(const std::vector<Binomial>& elements,
                     const TermOrder& order);

bool IdealContains(const GroebnerBasis& basis, const Binomial& b);

// Compares reduced bases under plain degrevlex in `nvars` variables.
bool IdealEqual(const std::vector<Binomial>& gens1,
                const std::vector<Binomial>& gens2, std::size_t nvars);

// A strictly positive integer grading g with g·lead = g·trail for every
// generator, if one exists.
std::optional<IntVector> PositiveGrading(const std::vector<Binomial>& gens,
                                         std::size_t nvars);

// Generators of <gens> : (x_1 ⋯ x_n)^∞, one variable at a time. With a
// positive grading each step is a graded revlex basis with that variable
// last, divided by the variable's content; otherwise an elimination with an
// auxiliary variable y and x_i·y - 1.
std::vector<Binomial> SaturateVariables(const std::vector<Binomial>& gens,
                                        std::size_t nvars);

struct GradedGenerators {
  IntVector degree;
  std::size_t count = 0;
  // Kept generators of this degree, the first being the representative.
  std::vector<Binomial> generators;
};

// Extracts a minimal generating set from homogeneous generators of an ideal
// graded by a pointed configuration. Degrees are visited by (functional
// value, lexicographic) order, which refines the semigroup partial order.
// Throws NotPointed, NotHomogeneous.
std::vector<GradedGenerators> MinimalGenerators(const std::vector<Binomial>& gens,
                                                const GeneratorMatrix& grading);

}  // namespace toricdegen

#endif  // TORICDEGEN_GROEBNER_H_
