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

#include <boost/functional/hash.hpp>

#include "toricdegen/errors.h"

namespace toricdegen {

IntVector ZeroVector(std::size_t dim) { return IntVector(dim, Integer(0)); }

IntVector UnitVector(std::size_t dim, std::size_t index) {
  IntVector v(dim, Integer(0));
  v.at(index) = 1;
  return v;
}

IntVector Add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector Subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector Scale(const Integer& k, const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

Integer Dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool IsZero(const IntVector& a) {
  for (const Integer& x : a) {
    if (x != 0) return false;
  }
  return true;
}

bool IsNonNegative(const IntVector& a) {
  for (const Integer& x : a) {
    if (x < 0) return false;
  }
  return true;
}

Integer ParseInteger(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string ToString(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += v[i].str();
  }
  out += ")";
  return out;
}

Integer Gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer Lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / Gcd(a, b) * b);
}

Integer BinomialCoefficient(const Integer& n, const Integer& k) {
  if (k < 0 || n < 0 || k > n) return 0;
  const Integer kk = (k > n - k) ? Integer(n - k) : k;
  Integer result = 1;
  for (Integer i = 1; i <= kk; ++i) {
    result = result * (n - kk + i) / i;
  }
  return result;
}

std::size_t IntVectorHash::operator()(const IntVector& v) const {
  std::size_t seed = v.size();
  for (const Integer& x : v) {
    boost::hash_combine(seed, boost::multiprecision::hash_value(x));
  }
  return seed;
}

}  // namespace toricdegen
