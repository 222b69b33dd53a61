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
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.h"
#include "commands.h"
#include "toricdegen/errors.h"
#include "toricdegen/problem_file.h"

#ifndef TORICDEGEN_CORPUS_DIR
#define TORICDEGEN_CORPUS_DIR "corpus"
#endif

namespace {

using toricdegen::tools::CommandOptions;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  std::string order;
  std::string tiebreak;
  std::uint64_t seed = toricdegen::tools::kDefaultSeed;
  std::size_t max_n = 20;
  bool json = false;
};

CommandOptions MakeOptions(const GlobalFlags& flags) {
  CommandOptions options;
  options.seed = flags.seed;
  options.max_n = flags.max_n;
  if (!flags.tiebreak.empty()) options.tiebreak = toricdegen::ParseTieBreak(flags.tiebreak);
  if (!flags.order.empty()) {
    std::vector<std::size_t> permutation;
    for (const toricdegen::Integer& i : toricdegen::tools::ParseIntegerList(flags.order)) {
      if (i < 0) throw toricdegen::tools::UsageError("--order entries must be nonnegative");
      permutation.push_back(static_cast<std::size_t>(i));
    }
    options.permutation = std::move(permutation);
  }
  return options;
}

void Emit(const toricdegen::Json& report, bool json) {
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << toricdegen::tools::RenderText(report);
  }
}

int RunAccept(const std::string& corpus, const GlobalFlags& flags,
              const std::vector<std::string>& only) {
  toricdegen::tools::AcceptanceOptions options;
  options.corpus_dir = corpus;
  options.seed = flags.seed;
  options.max_n = flags.max_n;
  options.only = only;
  const auto results = toricdegen::tools::RunAcceptance(
      options, [](const toricdegen::tools::CriterionResult& r) {
        std::cout << toricdegen::tools::FormatResult(r) << std::endl;
      });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return toricdegen::tools::AcceptanceExitCode(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner degenerations of toric ideals"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--order", flags.order, "Variable permutation, e.g. 2,0,1");
  app.add_option("--tiebreak", flags.tiebreak, "lex or degrevlex");
  app.add_option("--seed", flags.seed, "Random seed");
  app.add_option("--max-n", flags.max_n, "Largest generator count for subset enumeration");
  app.add_flag("--json", flags.json, "Print the report as JSON");

  std::string file;
  auto* toric = app.add_subcommand("toric", "Toric ideal and reduced Groebner basis");
  toric->add_option("file", file, "Problem file")->required();
  auto* degenerate = app.add_subcommand("degenerate", "A_w, degenerated generators and the equality check");
  degenerate->add_option("file", file, "Problem file")->required();

  std::string which = "betti";
  auto* invariants = app.add_subcommand("invariants", "Betti elements, saturation, approximation");
  invariants->add_option("file", file, "Problem file")->required();
  invariants->add_option("--which", which, "betti, saturation, approx or unique");

  std::string z_text;
  std::optional<std::string> lambda_text;
  auto* moebius = app.add_subcommand("moebius", "Moebius function values");
  moebius->add_option("file", file, "Problem file")->required();
  moebius->add_option("--z", z_text, "Element of the ambient lattice, e.g. 2,3")->required();
  moebius->add_option("--lambda", lambda_text, "Last coordinate in S_w");

  std::string corpus = TORICDEGEN_CORPUS_DIR;
  std::vector<std::string> only;
  auto* accept = app.add_subcommand("accept", "Run the acceptance criteria");
  accept->add_option("corpus", corpus, "Corpus directory");
  accept->add_option("--only", only, "Criterion ids to run");

  for (CLI::App* sub : {toric, degenerate, invariants, moebius, accept}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    const CommandOptions options = MakeOptions(flags);
    if (accept->parsed()) return RunAccept(corpus, flags, only);
    const toricdegen::ProblemFile problem = toricdegen::LoadProblemFile(file);
    toricdegen::Json report;
    if (toric->parsed()) {
      report = toricdegen::tools::CmdToric(problem, options);
    } else if (degenerate->parsed()) {
      report = toricdegen::tools::CmdDegenerate(problem, options);
    } else if (invariants->parsed()) {
      report = toricdegen::tools::CmdInvariants(
          problem, toricdegen::tools::ParseInvariantKind(which), options);
    } else {
      std::optional<toricdegen::Integer> lambda;
      if (lambda_text.has_value()) lambda = toricdegen::ParseInteger(*lambda_text);
      report = toricdegen::tools::CmdMoebius(
          problem, toricdegen::tools::ParseIntegerList(z_text), lambda, options);
    }
    Emit(report, flags.json);
    return kExitSuccess;
  } catch (const toricdegen::TheoryViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const toricdegen::CertificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const toricdegen::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const toricdegen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
