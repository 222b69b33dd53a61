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
#ifndef TORICDEGEN_PROBLEM_FILE_H_
#define TORICDEGEN_PROBLEM_FILE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "toricdegen/binomial.h"
#include "toricdegen/groebner.h"
#include "toricdegen/integer.h"
#include "toricdegen/lattice.h"

namespace toricdegen {

using Json = nlohmann::ordered_json;

struct OrderSpec {
  TieBreak tiebreak = TieBreak::kLex;
  // Empty means the identity.
  std::vector<std::size_t> permutation;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

// One problem instance. On disk:
//
//   {
//     "name": "example_1-1",
//     "dimension": 1,
//     "generators": [["6"], ["10"], ["15"]],
//     "weights": ["1", "1", "1"],
//     "order": {"tiebreak": "lex", "permutation": [0, 1, 2]},
//     "labels": ["x1", "x2", "x3"]
//   }
//
// Integers are decimal strings (plain JSON integers are accepted too). Only
// "generators" is required; "dimension" is needed when there are none.
struct ProblemFile {
  std::string name;
  GeneratorMatrix generators;
  std::optional<IntVector> weights;
  std::optional<OrderSpec> order;
  std::optional<std::vector<std::string>> labels;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;

  // Labels for the n variables (and t), defaulting to x1..xn.
  std::vector<std::string> VariableLabels(bool with_t = false) const;
  // weights (or zero) refined by the order spec.
  TermOrder Order() const;
};

// Throws ParseError carrying the line and column of the problem.
ProblemFile ParseProblemFile(std::string_view text);
ProblemFile LoadProblemFile(const std::filesystem::path& path);
std::string PrintProblemFile(const ProblemFile& file);

// Reads a whole file. Throws Error when it cannot be opened.
std::string ReadFile(const std::filesystem::path& path);
// Parses JSON, converting syntax errors to ParseError with line/column.
Json ParseJson(std::string_view text);

Json ToJson(const Integer& v);
Json ToJson(const IntVector& v);
Json ToJson(const std::vector<IntVector>& vs);
Json ToJson(const std::vector<Binomial>& gens, const std::vector<std::string>& labels);
Json ToJson(const TermOrder& order);
IntVector IntVectorFromJson(const Json& j);
std::vector<Binomial> BinomialsFromJson(const Json& j,
                                        const std::vector<std::string>& labels);

}  // namespace toricdegen

#endif  // TORICDEGEN_PROBLEM_FILE_H_
