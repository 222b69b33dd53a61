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

#include <utility>

#include "toricdegen/errors.h"

namespace toricdegen {
namespace {

// k >= 0 with r = k·b, if any.
std::optional<Integer> ExactMultiple(const IntVector& r, const IntVector& b) {
  std::optional<Integer> k;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) {
      if (r[j] != 0) return std::nullopt;
      continue;
    }
    if (r[j] % b[j] != 0) return std::nullopt;
    const Integer q = r[j] / b[j];
    if (k.has_value() && *k != q) return std::nullopt;
    k = q;
  }
  if (!k.has_value()) throw TheoryViolation("the Betti element is zero");
  if (*k < 0) return std::nullopt;
  return k;
}

std::vector<SubsetWitness> SubsetWitnesses(const std::vector<IntVector>& columns,
                                           const IntVector& target,
                                           const IntVector& b, std::size_t max_n) {
  const std::size_t n = columns.size();
  if (n > max_n) {
    throw LimitExceeded("subset enumeration over " + std::to_string(n) +
                        " generators exceeds the limit of " + std::to_string(max_n));
  }
  std::vector<SubsetWitness> out;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    IntVector r = target;
    SubsetWitness wit;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) {
        r = Subtract(r, columns[i]);
        wit.subset.push_back(i);
      }
    }
    std::optional<Integer> k = ExactMultiple(r, b);
    if (!k.has_value()) continue;
    wit.k = *k;
    out.push_back(std::move(wit));
  }
  return out;
}

Integer SignedBinomial(const SubsetWitness& a, long long n_minus_d_minus_1) {
  const Integer c = BinomialCoefficient(a.k + n_minus_d_minus_1, a.k);
  return a.subset.size() % 2 == 0 ? c : Integer(-c);
}

long long ExcessDimension(const SemigroupPresentation& s) {
  return static_cast<long long>(s.count()) - static_cast<long long>(s.ambient_dim()) - 1;
}

void RequireFormulaHypotheses(const MoebiusContext& ctx) {
  if (!ctx.closed_formula_obstruction().empty()) {
    throw HypothesisViolated(ctx.closed_formula_obstruction());
  }
}

}  // namespace

Integer MuBruteForce(const SemigroupPresentation& s, const IntVector& z) {
  if (!s.pointed()) throw NotPointed("μ_S needs a pointed semigroup");
  const Integer height = s.Height(z);
  if (height < 0) return 0;
  const std::vector<IntVector> ball = ElementsUpTo(s, height);
  const std::unordered_set<IntVector, IntVectorHash> in_s(ball.begin(), ball.end());
  if (in_s.count(z) == 0) return 0;
  // The interval [0, z], in an order compatible with <_S.
  std::vector<IntVector> interval;
  for (const IntVector& e : ball) {
    if (in_s.count(Subtract(z, e)) > 0) interval.push_back(e);
  }
  std::vector<Integer> mu(interval.size());
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (mu[j] != 0 && in_s.count(Subtract(interval[i], interval[j])) > 0) sum += mu[j];
    }
    mu[i] = -sum;
  }
  return mu.back();
}

MoebiusTable::MoebiusTable(const SemigroupPresentation& s, const Integer& bound)
    : functional_(s.functional()), bound_(bound), elements_(ElementsUpTo(s, bound)),
      in_s_(elements_.begin(), elements_.end()) {
  std::vector<std::pair<IntVector, Integer>> support;
  for (const IntVector& y : elements_) {
    Integer value = 1;
    if (!IsZero(y)) {
      Integer sum = 0;
      for (const auto& [x, mx] : support) {
        if (in_s_.count(Subtract(y, x)) > 0) sum += mx;
      }
      value = -sum;
    }
    if (value != 0) {
      support.emplace_back(y, value);
      nonzero_.emplace(y, value);
    }
  }
}

Integer MoebiusTable::Mu(const IntVector& z) const {
  if (Dot(functional_, z) > bound_) {
    throw InvalidParams(ToString(z) + " lies above the table bound " + bound_.str());
  }
  auto it = nonzero_.find(z);
  return it == nonzero_.end() ? Integer(0) : it->second;
}

MoebiusContext::MoebiusContext(const SemigroupPresentation& s) : s_(s) {
  if (!s_.pointed() || s_.has_zero_generator()) {
    obstruction_ = "S is not pointed or has a zero generator";
    return;
  }
  betti_ = BettiElements(s_).betti;
  if (betti_.size() == 1) unique_betti_ = betti_.front();
  if (!s_.full_lattice()) {
    obstruction_ = "the generators do not span Z^" + std::to_string(s_.ambient_dim());
  } else if (!unique_betti_.has_value()) {
    obstruction_ = "S has " + std::to_string(betti_.size()) +
                   " Betti elements; the closed formula needs exactly one";
  }
}

MoebiusContext::MoebiusContext(const SemigroupPresentation& s, IntVector w)
    : MoebiusContext(s) {
  const DegenerationContext ctx(s_, w);
  w_ = std::move(w);
  degenerated_ = ctx.degenerated();
  if (!obstruction_.empty()) {
    degeneration_obstruction_ = obstruction_;
    return;
  }
  degenerated_betti_ = BettiElements(*degenerated_).betti;
  if (degenerated_betti_.size() != 1) {
    degeneration_obstruction_ = "S_w has " + std::to_string(degenerated_betti_.size()) +
                                " Betti elements; the formula needs exactly one";
    return;
  }
  const IntVector& bw = degenerated_betti_.front();
  const IntVector head(bw.begin(), bw.end() - 1);
  if (head != *unique_betti_) {
    degeneration_obstruction_ = "the Betti element " + ToString(bw) +
                                " of S_w does not lie over " + ToString(*unique_betti_);
    return;
  }
  d_w_ = bw.back();
}

std::vector<SubsetWitness> Az(const MoebiusContext& ctx, const IntVector& z,
                              std::size_t max_n) {
  if (!ctx.unique_betti().has_value()) {
    throw MissingUniqueBetti("A_z needs |Bet(S)| = 1; " +
                             (ctx.closed_formula_obstruction().empty()
                                  ? std::string("it is not")
                                  : ctx.closed_formula_obstruction()));
  }
  const SemigroupPresentation& s = ctx.semigroup();
  if (z.size() != s.ambient_dim()) throw DimensionMismatch("z has the wrong length");
  std::vector<SubsetWitness> out =
      SubsetWitnesses(s.generators().columns(), z, *ctx.unique_betti(), max_n);
  if (ctx.d_w().has_value()) {
    for (SubsetWitness& a : out) {
      Integer l = a.k * *ctx.d_w();
      for (std::size_t i : a.subset) l += (*ctx.weight())[i];
      a.l = l;
    }
  }
  return out;
}

Integer MuClosed(const MoebiusContext& ctx, const IntVector& z, std::size_t max_n) {
  RequireFormulaHypotheses(ctx);
  const long long e = ExcessDimension(ctx.semigroup());
  Integer mu = 0;
  for (const SubsetWitness& a : Az(ctx, z, max_n)) mu += SignedBinomial(a, e);
  return mu;
}

std::vector<SubsetWitness> Bz(const MoebiusContext& ctx, const IntVector& z,
                              const Integer& lambda, std::size_t max_n) {
  if (!ctx.d_w().has_value()) {
    throw MissingDegenerationData(
        "B_z needs a weight with Bet(S_w) = {(b, d_w)}" +
        (ctx.degeneration_obstruction().empty() ? std::string()
                                                : "; " + ctx.degeneration_obstruction()));
  }
  IntVector target = z;
  target.push_back(lambda);
  IntVector b = *ctx.unique_betti();
  b.push_back(*ctx.d_w());
  const SemigroupPresentation& sw = *ctx.degenerated();
  if (target.size() != sw.ambient_dim()) throw DimensionMismatch("z has the wrong length");
  return SubsetWitnesses(sw.generators().columns(), target, b, max_n + 1);
}

Integer MuDegeneration(const MoebiusContext& ctx, const IntVector& z,
                       const Integer& lambda, std::size_t max_n) {
  RequireFormulaHypotheses(ctx);
  if (!ctx.d_w().has_value()) {
    throw HypothesisViolated(ctx.degeneration_obstruction().empty()
                                 ? std::string("no weight vector was given")
                                 : ctx.degeneration_obstruction());
  }
  const SemigroupPresentation& sw = *ctx.degenerated();
  if (!sw.pointed() || !sw.full_lattice()) {
    throw TheoryViolation("S_w should be pointed and span Z^" +
                          std::to_string(sw.ambient_dim()));
  }
  const long long e = ExcessDimension(ctx.semigroup());
  Integer mu = 0;
  for (const SubsetWitness& a : Az(ctx, z, max_n)) {
    if (lambda == *a.l) mu += SignedBinomial(a, e);
    else if (lambda == *a.l + 1) mu -= SignedBinomial(a, e);
  }
  return mu;
}

}  // namespace toricdegen
