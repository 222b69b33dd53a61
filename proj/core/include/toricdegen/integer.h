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

#ifndef TORICDEGEN_INTEGER_H_
#define TORICDEGEN_INTEGER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricdegen {

// Arbitrary precision integers and exact rationals used everywhere in the
// library. Nothing in the public API uses fixed-width arithmetic on values
// that come from user data.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An element of Z^d.
using IntVector = std::vector<Integer>;

IntVector ZeroVector(std::size_t dim);
IntVector UnitVector(std::size_t dim, std::size_t index);
IntVector Add(const IntVector& a, const IntVector& b);
IntVector Subtract(const IntVector& a, const IntVector& b);
IntVector Scale(const Integer& k, const IntVector& a);
Integer Dot(const IntVector& a, const IntVector& b);
bool IsZero(const IntVector& a);
bool IsNonNegative(const IntVector& a);

// Parses a decimal integer with an optional leading sign. Throws ParseError.
Integer ParseInteger(std::string_view text);

// "(a,b,c)" rendering.
std::string ToString(const IntVector& v);

Integer Gcd(const Integer& a, const Integer& b);
Integer Lcm(const Integer& a, const Integer& b);
// Binomial coefficient C(n, k); zero when k < 0 or k > n (n >= 0).
Integer BinomialCoefficient(const Integer& n, const Integer& k);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const;
};

}  // namespace toricdegen

#endif  // TORICDEGEN_INTEGER_H_
