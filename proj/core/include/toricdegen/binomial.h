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
#ifndef TORICDEGEN_BINOMIAL_H_
#define TORICDEGEN_BINOMIAL_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricdegen/integer.h"
#include "toricdegen/lattice.h"

namespace toricdegen {

// x^u for u ∈ N^n.
class Monomial {
 public:
  Monomial() = default;
  // Throws InvalidParams on a negative exponent.
  explicit Monomial(IntVector exponents);
  static Monomial One(std::size_t nvars);
  static Monomial Variable(std::size_t nvars, std::size_t index,
                           const Integer& power = 1);

  std::size_t nvars() const { return exponents_.size(); }
  const IntVector& exponents() const { return exponents_; }
  const Integer& operator[](std::size_t i) const { return exponents_[i]; }
  Integer Degree() const;
  bool IsOne() const { return IsZero(exponents_); }

  bool Divides(const Monomial& other) const;
  bool IsCoprimeTo(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires Divides(*this) on the argument.
  Monomial DivideBy(const Monomial& divisor) const;
  Monomial Lcm(const Monomial& other) const;
  Monomial Gcd(const Monomial& other) const;
  // Same monomial in more (or fewer) variables; dropped variables must have
  // exponent zero unless `allow_drop` is set.
  Monomial Resized(std::size_t nvars, bool allow_drop = false) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison on exponent vectors, for containers only.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exponents_ < b.exponents_;
  }

 private:
  IntVector exponents_;
};

enum class TieBreak {
  kLex,
  kDegRevLex,
  // Reverse lexicographic without a total-degree step. Only a monomial order
  // on top of a strictly positive weight; used for saturation.
  kRevLex,
};

std::string_view TieBreakName(TieBreak t);
// Accepts "lex", "degrevlex", "revlex". Throws ParseError.
TieBreak ParseTieBreak(std::string_view name);

// Monomials are compared by weight·u first; ties are broken by `tiebreak`
// over the variables listed in `permutation` (most significant first).
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(IntVector weight, TieBreak tiebreak,
            std::vector<std::size_t> permutation = {});

  static TermOrder Lex(std::size_t nvars);
  static TermOrder DegRevLex(std::size_t nvars);

  std::size_t nvars() const { return weight_.size(); }
  const IntVector& weight() const { return weight_; }
  TieBreak tiebreak() const { return tiebreak_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  std::strong_ordering Compare(const Monomial& a, const Monomial& b) const;
  bool Greater(const Monomial& a, const Monomial& b) const {
    return Compare(a, b) == std::strong_ordering::greater;
  }

 private:
  IntVector weight_;
  TieBreak tiebreak_ = TieBreak::kLex;
  std::vector<std::size_t> permutation_;
};

// The pure difference binomial x^lead - x^trail. Stored exactly as given;
// shared variable factors are not cancelled.
struct Binomial {
  Monomial lead;
  Monomial trail;

  Binomial() = default;
  Binomial(Monomial l, Monomial t);
  // Builds x^u - x^v with the larger monomial (under `order`) first;
  // nullopt when u == v.
  static std::optional<Binomial> Oriented(const Monomial& u, const Monomial& v,
                                          const TermOrder& order);
  static Binomial FromExponents(const IntVector& u, const IntVector& v);

  std::size_t nvars() const { return lead.nvars(); }
  // lead - trail as an integer vector.
  IntVector Difference() const { return Subtract(lead.exponents(), trail.exponents()); }
  bool IsHomogeneous(const GeneratorMatrix& grading) const;
  // Grading degree of the lead term.
  IntVector DegreeIn(const GeneratorMatrix& grading) const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend bool operator<(const Binomial& a, const Binomial& b) {
    if (a.lead == b.lead) return a.trail < b.trail;
    return a.lead < b.lead;
  }
};

// x1, ..., xn (and "t" appended when `with_t`).
std::vector<std::string> DefaultLabels(std::size_t n, bool with_t = false);

// "x1^5*x2 - x3^2*t"; the constant monomial prints as "1".
std::string FormatMonomial(const Monomial& m,
                           const std::vector<std::string>& labels);
std::string FormatBinomial(const Binomial& b,
                           const std::vector<std::string>& labels);
// Inverse of FormatBinomial. Throws ParseError.
Monomial ParseMonomial(std::string_view text,
                       const std::vector<std::string>& labels);
Binomial ParseBinomial(std::string_view text,
                       const std::vector<std::string>& labels);

}  // namespace toricdegen

#endif  // TORICDEGEN_BINOMIAL_H_
