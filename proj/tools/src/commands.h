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
#ifndef TORICDEGEN_TOOLS_COMMANDS_H_
#define TORICDEGEN_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricdegen/binomial.h"
#include "toricdegen/integer.h"
#include "toricdegen/problem_file.h"

namespace toricdegen::tools {

inline constexpr std::uint64_t kDefaultSeed = 2026;

struct CommandOptions {
  std::optional<TieBreak> tiebreak;
  std::optional<std::vector<std::size_t>> permutation;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_n = 20;
};

enum class InvariantKind { kBetti, kSaturation, kApprox, kUnique };
InvariantKind ParseInvariantKind(const std::string& name);

// The problem's term order with command-line overrides applied.
TermOrder EffectiveOrder(const ProblemFile& file, const CommandOptions& options);

// Each command returns a report object:
//   {"command", "input", "options", "results"}.
Json CmdToric(const ProblemFile& file, const CommandOptions& options);
Json CmdDegenerate(const ProblemFile& file, const CommandOptions& options);
Json CmdInvariants(const ProblemFile& file, InvariantKind which,
                   const CommandOptions& options);
Json CmdMoebius(const ProblemFile& file, const IntVector& z,
                const std::optional<Integer>& lambda, const CommandOptions& options);

// Indented plain-text rendering of a report.
std::string RenderText(const Json& report);

// "2,3" or "(2, 3)" -> (2, 3).
IntVector ParseIntegerList(const std::string& text);

}  // namespace toricdegen::tools

#endif  // TORICDEGEN_TOOLS_COMMANDS_H_
