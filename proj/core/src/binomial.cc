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
#include "toricdegen/binomial.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "toricdegen/errors.h"

namespace toricdegen {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial::Monomial(IntVector exponents) : exponents_(std::move(exponents)) {
  if (!IsNonNegative(exponents_)) {
    throw InvalidParams("negative exponent in monomial " + ToString(exponents_));
  }
}

Monomial Monomial::One(std::size_t nvars) { return Monomial(ZeroVector(nvars)); }

Monomial Monomial::Variable(std::size_t nvars, std::size_t index,
                            const Integer& power) {
  IntVector e = ZeroVector(nvars);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Integer Monomial::Degree() const {
  Integer s = 0;
  for (const Integer& e : exponents_) s += e;
  return s;
}

bool Monomial::Divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::IsCoprimeTo(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] += other.exponents_[i];
  }
  return out;
}

Monomial Monomial::DivideBy(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] -= divisor.exponents_[i];
    if (out.exponents_[i] < 0) throw InvalidParams("monomial does not divide");
  }
  return out;
}

Monomial Monomial::Lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (other.exponents_[i] > out.exponents_[i]) out.exponents_[i] = other.exponents_[i];
  }
  return out;
}

Monomial Monomial::Gcd(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (other.exponents_[i] < out.exponents_[i]) out.exponents_[i] = other.exponents_[i];
  }
  return out;
}

Monomial Monomial::Resized(std::size_t nvars, bool allow_drop) const {
  IntVector e = ZeroVector(nvars);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i < nvars) {
      e[i] = exponents_[i];
    } else if (exponents_[i] != 0 && !allow_drop) {
      throw DimensionMismatch("cannot drop a variable with nonzero exponent");
    }
  }
  return Monomial(std::move(e));
}

std::string_view TieBreakName(TieBreak t) {
  switch (t) {
    case TieBreak::kLex:
      return "lex";
    case TieBreak::kDegRevLex:
      return "degrevlex";
    case TieBreak::kRevLex:
      return "revlex";
  }
  return "lex";
}

TieBreak ParseTieBreak(std::string_view name) {
  if (name == "lex") return TieBreak::kLex;
  if (name == "degrevlex") return TieBreak::kDegRevLex;
  if (name == "revlex") return TieBreak::kRevLex;
  throw ParseError("unknown tiebreak '" + std::string(name) +
                   "' (expected lex or degrevlex)");
}

TermOrder::TermOrder(IntVector weight, TieBreak tiebreak,
                     std::vector<std::size_t> permutation)
    : weight_(std::move(weight)),
      tiebreak_(tiebreak),
      permutation_(std::move(permutation)) {
  const std::size_t n = weight_.size();
  if (!IsNonNegative(weight_)) throw InvalidParams("negative weight entry");
  if (permutation_.empty()) {
    permutation_.resize(n);
    std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  }
  std::vector<std::size_t> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != n || sorted[i] != i) {
      throw InvalidParams("variable permutation is not a permutation of 0.." +
                          std::to_string(n == 0 ? 0 : n - 1));
    }
  }
  if (tiebreak_ == TieBreak::kRevLex) {
    for (const Integer& w : weight_) {
      if (w <= 0) throw InvalidParams("revlex tiebreak needs a positive weight");
    }
  }
}

TermOrder TermOrder::Lex(std::size_t nvars) {
  return TermOrder(ZeroVector(nvars), TieBreak::kLex);
}

TermOrder TermOrder::DegRevLex(std::size_t nvars) {
  return TermOrder(ZeroVector(nvars), TieBreak::kDegRevLex);
}

std::strong_ordering TermOrder::Compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars()) {
    throw DimensionMismatch("monomial and term order have different arity");
  }
  const Integer wa = Dot(weight_, a.exponents());
  const Integer wb = Dot(weight_, b.exponents());
  if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
  switch (tiebreak_) {
    case TieBreak::kLex:
      for (std::size_t v : permutation_) {
        if (a[v] != b[v]) {
          return a[v] < b[v] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
      }
      return std::strong_ordering::equal;
    case TieBreak::kDegRevLex: {
      const Integer da = a.Degree();
      const Integer db = b.Degree();
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
      [[fallthrough]];
    }
    case TieBreak::kRevLex:
      for (auto it = permutation_.rbegin(); it != permutation_.rend(); ++it) {
        const std::size_t v = *it;
        if (a[v] != b[v]) {
          // Smaller exponent in the cheapest differing variable wins.
          return a[v] > b[v] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

Binomial::Binomial(Monomial l, Monomial t) : lead(std::move(l)), trail(std::move(t)) {
  if (lead.nvars() != trail.nvars()) {
    throw DimensionMismatch("binomial terms have different arity");
  }
}

std::optional<Binomial> Binomial::Oriented(const Monomial& u, const Monomial& v,
                                           const TermOrder& order) {
  const auto c = order.Compare(u, v);
  if (c == std::strong_ordering::equal) return std::nullopt;
  if (c == std::strong_ordering::greater) return Binomial(u, v);
  return Binomial(v, u);
}

Binomial Binomial::FromExponents(const IntVector& u, const IntVector& v) {
  return Binomial(Monomial(u), Monomial(v));
}

bool Binomial::IsHomogeneous(const GeneratorMatrix& grading) const {
  return grading.Apply(lead.exponents()) == grading.Apply(trail.exponents());
}

IntVector Binomial::DegreeIn(const GeneratorMatrix& grading) const {
  return grading.Apply(lead.exponents());
}

std::vector<std::string> DefaultLabels(std::size_t n, bool with_t) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  if (with_t) labels.push_back("t");
  return labels;
}

std::string FormatMonomial(const Monomial& m,
                           const std::vector<std::string>& labels) {
  if (labels.size() != m.nvars()) throw DimensionMismatch("label count != nvars");
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += labels[i];
    if (m[i] != 1) out += "^" + m[i].str();
  }
  return out.empty() ? "1" : out;
}

std::string FormatBinomial(const Binomial& b,
                           const std::vector<std::string>& labels) {
  return FormatMonomial(b.lead, labels) + " - " + FormatMonomial(b.trail, labels);
}

Monomial ParseMonomial(std::string_view text,
                       const std::vector<std::string>& labels) {
  text = Trim(text);
  IntVector e = ZeroVector(labels.size());
  if (text == "1") return Monomial(std::move(e));
  if (text.empty()) throw ParseError("empty monomial");
  while (!text.empty()) {
    const std::size_t star = text.find('*');
    std::string_view factor = Trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    Integer power = 1;
    const std::size_t caret = factor.find('^');
    if (caret != std::string_view::npos) {
      power = ParseInteger(Trim(factor.substr(caret + 1)));
      factor = Trim(factor.substr(0, caret));
      if (power < 0) throw ParseError("negative exponent in '" + std::string(factor) + "'");
    }
    const auto it = std::find(labels.begin(), labels.end(), factor);
    if (it == labels.end()) {
      throw ParseError("unknown variable '" + std::string(factor) + "'");
    }
    e[static_cast<std::size_t>(it - labels.begin())] += power;
  }
  return Monomial(std::move(e));
}

Binomial ParseBinomial(std::string_view text,
                       const std::vector<std::string>& labels) {
  const std::size_t minus = text.find(" - ");
  if (minus == std::string_view::npos) {
    throw ParseError("binomial '" + std::string(text) + "' is not of the form 'm1 - m2'");
  }
  return Binomial(ParseMonomial(text.substr(0, minus), labels),
                  ParseMonomial(text.substr(minus + 3), labels));
}

}  // namespace toricdegen
