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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "acceptance.h"
#include "commands.h"
#include "gtest/gtest.h"
#include "toricdegen/errors.h"
#include "toricdegen/problem_file.h"

namespace toricdegen::tools {
namespace {

namespace fs = std::filesystem;

const fs::path kCorpus = TORICDEGEN_CORPUS_DIR;

ProblemFile Load(const std::string& stem) { return LoadProblemFile(kCorpus / (stem + ".json")); }

ProblemFile Numerical(const std::string& text) {
  return ParseProblemFile(R"({"generators": )" + text + "}");
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("toricdegen_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

int RunTool(const std::string& args) {
  const std::string command =
      std::string(TORICDEGEN_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CmdToricTest, ExampleOneOne) {
  const Json r = CmdToric(Load("example_1-1"), {})["results"];
  EXPECT_TRUE(r["pointed"].get<bool>());
  const std::vector<std::string> labels = DefaultLabels(3);
  const std::vector<Binomial> gb = BinomialsFromJson(r["groebner_basis"]["elements"], labels);
  std::set<std::string> leads;
  for (const Binomial& g : gb) leads.insert(FormatMonomial(g.lead, labels));
  EXPECT_EQ(leads, (std::set<std::string>{"x1^5", "x2^3"}));
  EXPECT_TRUE(IdealEqual(gb,
                         {ParseBinomial("x1^5 - x2^3", labels),
                          ParseBinomial("x2^3 - x3^2", labels)},
                         3));
}

TEST(CmdToricTest, IdentityAndScroll) {
  EXPECT_TRUE(CmdToric(Load("identity_2"), {})["results"]["toric_ideal"].empty());
  EXPECT_EQ(CmdToric(Load("example_scroll"), {})["results"]["minimal_generators"].size(), 3u);
}

TEST(CmdDegenerateTest, Verdicts) {
  EXPECT_TRUE(CmdDegenerate(Load("example_1-1"), {})["results"]["theorem_main"]["equal"].get<bool>());
  EXPECT_TRUE(
      CmdDegenerate(Load("example_scroll"), {})["results"]["theorem_main"]["equal"].get<bool>());
  ProblemFile zero = Load("example_1-1");
  zero.weights = IntVector{0, 0, 0};
  EXPECT_TRUE(CmdDegenerate(zero, {})["results"]["theorem_main"]["equal"].get<bool>());
  EXPECT_THROW(CmdDegenerate(Load("moebius_2_3"), {}), InvalidParams);
  ProblemFile bad = Load("example_1-1");
  bad.weights = IntVector{1, 1};
  EXPECT_THROW(CmdDegenerate(bad, {}), DimensionMismatch);
}

TEST(CmdInvariantsTest, SaturationAndBetti) {
  const Json sat = CmdInvariants(Load("saturation_A3"), InvariantKind::kSaturation, {})["results"];
  EXPECT_TRUE(sat["base"]["saturated"].get<bool>());
  EXPECT_FALSE(sat["degenerated"]["saturated"].get<bool>());
  EXPECT_EQ(IntVectorFromJson(sat["degenerated"]["witness"]), (IntVector{2, 2, 1}));
  EXPECT_TRUE(CmdInvariants(Load("saturation_A1"), InvariantKind::kSaturation, {})["results"]
                  ["degenerated"]["saturated"]
                      .get<bool>());
  const Json betti = CmdInvariants(Load("example_1-1"), InvariantKind::kBetti, {})["results"];
  EXPECT_EQ(betti["base"]["betti"], ToJson(std::vector<IntVector>{{30}}));
  EXPECT_THROW(CmdInvariants(Numerical(R"([["1"], ["-1"]])"), InvariantKind::kBetti, {}),
               NotPointed);
  EXPECT_THROW(ParseInvariantKind("bettis"), Error);
}

TEST(CmdMoebiusTest, TwoThree) {
  const ProblemFile f = Load("moebius_2_3");
  const Json two = CmdMoebius(f, {2}, std::nullopt, {})["results"];
  EXPECT_EQ(two["mu_bruteforce"], ToJson(Integer(-1)));
  EXPECT_TRUE(two["closed_formula"]["agreement"].get<bool>());
  EXPECT_EQ(CmdMoebius(f, {0}, std::nullopt, {})["results"]["mu_bruteforce"], ToJson(Integer(1)));
  EXPECT_EQ(CmdMoebius(f, {1}, std::nullopt, {})["results"]["mu_bruteforce"], ToJson(Integer(0)));
  const Json obstructed =
      CmdMoebius(Numerical(R"([["4"], ["6"], ["9"]])"), {12}, std::nullopt, {})["results"];
  EXPECT_TRUE(obstructed["closed_formula"]["value"].is_null());
  EXPECT_EQ(obstructed["closed_formula"]["note"].get<std::string>().rfind("brute force only", 0), 0u);
}

TEST(CmdMoebiusTest, Degeneration) {
  const Json r = CmdMoebius(Load("example_un_betti_w_2_3_5"), {60}, Integer(60), {})["results"];
  EXPECT_TRUE(r["degenerated_formula"]["agreement"].get<bool>());
  EXPECT_EQ(r["degenerated_formula"]["d_w"], ToJson(Integer(30)));
}

TEST(ReportTest, ByteIdenticalAcrossRuns) {
  const ProblemFile f = Load("example_1-1");
  CommandOptions options;
  options.seed = 99;
  const std::string first = CmdInvariants(f, InvariantKind::kApprox, options).dump(2);
  EXPECT_EQ(CmdInvariants(f, InvariantKind::kApprox, options).dump(2), first);
  EXPECT_EQ(RenderText(CmdToric(f, options)), RenderText(CmdToric(f, options)));
}

TEST(OptionsTest, OverridesApply) {
  CommandOptions options;
  options.tiebreak = TieBreak::kDegRevLex;
  options.permutation = std::vector<std::size_t>{2, 1, 0};
  const TermOrder order = EffectiveOrder(Load("example_1-1"), options);
  EXPECT_EQ(order.tiebreak(), TieBreak::kDegRevLex);
  EXPECT_EQ(order.permutation(), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(order.weight(), (IntVector{1, 1, 1}));
  EXPECT_EQ(ParseIntegerList("2,3"), (IntVector{2, 3}));
  EXPECT_EQ(ParseIntegerList("(2, -3)"), (IntVector{2, -3}));
  EXPECT_THROW(ParseIntegerList("2,,3"), Error);
}

TEST(CorpusTest, EveryEntryRoundTrips) {
  for (const CorpusEntry& e : LoadCorpus(kCorpus)) {
    EXPECT_EQ(ParseProblemFile(PrintProblemFile(e.file)), e.file) << e.stem;
  }
}

TEST(CorpusTest, EmptyOrMissingDirectoryIsUsageError) {
  TempDir dir;
  EXPECT_THROW(LoadCorpus(dir.path()), UsageError);
  EXPECT_THROW(LoadCorpus(dir.path() / "missing"), UsageError);
}

TEST(AcceptanceTest, CorruptedSidecarIsNamed) {
  TempDir dir;
  for (const auto& item : fs::directory_iterator(kCorpus)) {
    fs::copy_file(item.path(), dir.path() / item.path().filename());
  }
  {
    std::ofstream out(dir.path() / "example_1-1.expected.json");
    out << R"({"betti": [["31"]]})";
  }
  AcceptanceOptions options;
  options.corpus_dir = dir.path();
  options.only = {"0"};
  const std::vector<CriterionResult> results = RunAcceptance(options);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_NE(results[0].detail.find("example_1-1.betti"), std::string::npos) << results[0].detail;
  EXPECT_EQ(AcceptanceExitCode(results), 1);
  EXPECT_EQ(FormatResult(results[0]).rfind("FAIL  0", 0), 0u);
}

TEST(ExitCodeTest, ToolExitCodes) {
  TempDir dir;
  EXPECT_EQ(RunTool("accept " + dir.path().string()), 2);
  EXPECT_EQ(RunTool("accept --only 0 " + kCorpus.string()), 0);
  EXPECT_EQ(RunTool("toric " + (kCorpus / "example_1-1.json").string()), 0);
  EXPECT_EQ(RunTool("toric " + (dir.path() / "none.json").string()), 2);
  EXPECT_EQ(RunTool("degenerate " + (kCorpus / "moebius_2_3.json").string()), 2);
  EXPECT_EQ(RunTool("--json moebius " + (kCorpus / "moebius_2_3.json").string() + " --z 5"), 0);
  EXPECT_EQ(RunTool("frobnicate"), 2);
  {
    std::ofstream out(dir.path() / "broken.json");
    out << "{\"generators\": [[1]";
  }
  EXPECT_EQ(RunTool("toric " + (dir.path() / "broken.json").string()), 2);
}

}  // namespace
}  // namespace toricdegen::tools
