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
#ifndef TORICDEGEN_SEMIGROUP_H_
#define TORICDEGEN_SEMIGROUP_H_

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toricdegen/binomial.h"
#include "toricdegen/integer.h"
#include "toricdegen/toric.h"

namespace toricdegen {

// u >= 0 with π_A(u) = z, or nullopt. Throws NotPointed.
std::optional<IntVector> Member(const SemigroupPresentation& s, const IntVector& z);

struct Fiber {
  IntVector degree;
  // Sorted lexicographically.
  std::vector<IntVector> points;
};

// All u in N^n with π_A(u) = b. Stops with LimitExceeded after `max_points`.
Fiber ComputeFiber(const SemigroupPresentation& s, const IntVector& b,
                   std::size_t max_points = 1000000);

// Elements z of S with functional(z) <= bound, sorted by (functional, lex).
std::vector<IntVector> ElementsUpTo(const SemigroupPresentation& s,
                                    const Integer& bound);

struct BettiReport {
  // In (functional, lex) order.
  std::vector<IntVector> betti;
  std::vector<IntVector> betti_minimal;
  std::map<IntVector, std::size_t> beta1_counts;
  bool uniquely_presented = false;
  std::vector<Binomial> generators_used;

  bool IsBetti(const IntVector& b) const { return beta1_counts.count(b) > 0; }
};

BettiReport BettiElements(const SemigroupPresentation& s);
// Same, starting from any generating set of I_A (for example a Groebner
// basis under some order) instead of recomputing the toric ideal.
BettiReport BettiElementsFromGenerators(const SemigroupPresentation& s,
                                        const std::vector<Binomial>& gens);

struct InclusionReport {
  // b in Bet(S) -> every λ with (b, λ) in Bet(S_w), ascending.
  std::map<IntVector, std::vector<Integer>> lambdas;
  // Elements of Bet(S_w) whose projection is not in Bet(S).
  std::vector<IntVector> extra;
  BettiReport base;
  BettiReport degenerated;
};

// Throws TheoryViolation when some b in Bet(S) has no λ.
InclusionReport CheckTheoremInclusion(const DegenerationContext& ctx);

struct SaturationReport {
  bool saturated = true;
  std::optional<IntVector> witness;
  std::size_t checked_points = 0;
};

SaturationReport IsSaturated(const SemigroupPresentation& s);

// Decides saturation by testing every lattice point z of the cone with
// functional(z) <= bound for membership. Independent of the zonotope
// reduction; the default bound covers the zonotope.
SaturationReport SaturationByBall(const SemigroupPresentation& s,
                                  std::optional<Integer> bound = std::nullopt);

// Smallest a in S, by (functional, lex), with a + c in S for every zonotope
// lattice point c. Throws LimitExceeded past `max_height`.
IntVector ApproximationElement(const SemigroupPresentation& s,
                               const Integer& max_height = 100000);

struct ZonotopeCase {
  IntVector point;
  // "1", "2.1" or "2.2".
  std::string tag;
  Integer delta;
};

struct ApproximationCertificate {
  IntVector a;
  IntVector a_representation;
  Integer delta;
  std::vector<ZonotopeCase> per_point;
};

// Builds (a, δ) for S_w from an approximation element a of S. Throws
// InvalidParams if a does not approximate S, CertificationFailure if the
// assembled certificate does not verify.
ApproximationCertificate ApproxDegeneration(const DegenerationContext& ctx,
                                            const IntVector& a);

// Random element of the saturation of S: a nonnegative combination of the
// generators plus a zonotope point. `zonotope` must be ZonotopePoints(A).
IntVector RandomSaturationElement(const GeneratorMatrix& a,
                                  const std::vector<IntVector>& zonotope,
                                  std::mt19937_64& rng, int max_multiple = 6);

// Checks (a, δ) + v in S_w for `samples` random saturation elements v.
// Returns the first failing v.
std::optional<IntVector> SampleCertificate(const DegenerationContext& ctx,
                                           const ApproximationCertificate& cert,
                                           std::size_t samples, std::uint64_t seed);

// Connected components of the fiber graph: u ~ v when supp(u) ∩ supp(v) is
// nonempty. The number of minimal generators in degree b is this minus one.
std::size_t FiberGraphComponents(const Fiber& fiber);

}  // namespace toricdegen

#endif  // TORICDEGEN_SEMIGROUP_H_
