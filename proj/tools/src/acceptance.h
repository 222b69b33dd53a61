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
#ifndef TORICDEGEN_TOOLS_ACCEPTANCE_H_
#define TORICDEGEN_TOOLS_ACCEPTANCE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "commands.h"
#include "toricdegen/errors.h"
#include "toricdegen/lattice.h"
#include "toricdegen/problem_file.h"

namespace toricdegen::tools {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CorpusEntry {
  std::filesystem::path path;
  // File name without ".json"; also the lookup key.
  std::string stem;
  ProblemFile file;
  // Contents of <stem>.expected.json, if present.
  std::optional<Json> expected;
};

// Throws UsageError when the directory is missing or holds no problem files,
// ParseError on a malformed file.
std::vector<CorpusEntry> LoadCorpus(const std::filesystem::path& dir);

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::filesystem::path corpus_dir;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_n = 20;
  // Criterion ids to run; empty runs everything.
  std::vector<std::string> only;
};

// Runs criterion 0 (corpus expectations) and criteria 1 to 10, reporting
// each result as soon as it is known.
std::vector<CriterionResult> RunAcceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  1   <title>  (0.08 s)  <detail>"
std::string FormatResult(const CriterionResult& r);
// 0 when every criterion passed, 1 otherwise.
int AcceptanceExitCode(const std::vector<CriterionResult>& results);

struct RandomInstance {
  GeneratorMatrix a;
  IntVector w;
};

// n in [2, 4], d in [1, 3], entries in [0, 6] with no zero column, weights in
// [0, 8]. Uses only rng() and % so the stream is portable.
RandomInstance DrawRandomInstance(std::mt19937_64& rng);

}  // namespace toricdegen::tools

#endif  // TORICDEGEN_TOOLS_ACCEPTANCE_H_
