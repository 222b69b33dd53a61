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
#include "commands.h"

#include <sstream>
#include <utility>

#include "toricdegen/errors.h"
#include "toricdegen/groebner.h"
#include "toricdegen/moebius.h"
#include "toricdegen/semigroup.h"
#include "toricdegen/toric.h"

namespace toricdegen::tools {
namespace {

Json MakeReport(const std::string& command, const ProblemFile& file,
                const CommandOptions& options) {
  Json report;
  report["command"] = command;
  report["input"] = Json::parse(PrintProblemFile(file));
  Json opts;
  opts["order"] = ToJson(EffectiveOrder(file, options));
  opts["seed"] = options.seed;
  opts["max_n"] = options.max_n;
  report["options"] = std::move(opts);
  report["results"] = Json::object();
  return report;
}

const IntVector& RequireWeights(const ProblemFile& file) {
  if (!file.weights.has_value()) {
    throw InvalidParams("this command needs a \"weights\" entry in the problem file");
  }
  return *file.weights;
}

Json BettiJson(const BettiReport& r, const std::vector<std::string>& labels) {
  Json j;
  j["betti"] = ToJson(r.betti);
  j["betti_minimal"] = ToJson(r.betti_minimal);
  Json counts = Json::array();
  for (const IntVector& b : r.betti) {
    Json c;
    c["degree"] = ToJson(b);
    c["count"] = r.beta1_counts.at(b);
    counts.push_back(std::move(c));
  }
  j["beta1_counts"] = std::move(counts);
  j["uniquely_presented"] = r.uniquely_presented;
  j["minimal_generators"] = ToJson(r.generators_used, labels);
  return j;
}

Json SaturationJson(const SaturationReport& r) {
  Json j;
  j["saturated"] = r.saturated;
  j["witness"] = r.witness.has_value() ? ToJson(*r.witness) : Json(nullptr);
  j["checked_points"] = r.checked_points;
  return j;
}

Json WitnessJson(const std::vector<SubsetWitness>& ws) {
  Json out = Json::array();
  for (const SubsetWitness& w : ws) {
    Json j;
    std::vector<std::size_t> one_based;
    for (std::size_t i : w.subset) one_based.push_back(i + 1);
    j["subset"] = one_based;
    j["k"] = ToJson(w.k);
    if (w.l.has_value()) j["l"] = ToJson(*w.l);
    out.push_back(std::move(j));
  }
  return out;
}

void RenderValue(const Json& j, int indent, std::ostringstream& out);

void RenderScalar(const Json& j, std::ostringstream& out) {
  if (j.is_string()) out << j.get<std::string>();
  else out << j.dump();
}

bool IsFlat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const Json& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !IsFlat(e)) return false;
    if (e.is_string() && e.get<std::string>().find(' ') != std::string::npos) return false;
  }
  return true;
}

void RenderInline(const Json& j, std::ostringstream& out) {
  if (!j.is_array()) {
    RenderScalar(j, out);
    return;
  }
  out << "(";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out << ", ";
    RenderInline(j[i], out);
  }
  out << ")";
}

void RenderValue(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out << pad << key << ":";
      if (IsFlat(value)) {
        out << " ";
        RenderInline(value, out);
        out << "\n";
      } else {
        out << "\n";
        RenderValue(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) out << pad << "(none)\n";
    for (const Json& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        RenderValue(e, indent + 2, out);
      } else {
        out << pad;
        RenderInline(e, out);
        out << "\n";
      }
    }
  } else {
    out << pad;
    RenderScalar(j, out);
    out << "\n";
  }
}

}  // namespace

InvariantKind ParseInvariantKind(const std::string& name) {
  if (name == "betti") return InvariantKind::kBetti;
  if (name == "saturation") return InvariantKind::kSaturation;
  if (name == "approx") return InvariantKind::kApprox;
  if (name == "unique") return InvariantKind::kUnique;
  throw ParseError("unknown invariant '" + name + "'");
}

TermOrder EffectiveOrder(const ProblemFile& file, const CommandOptions& options) {
  ProblemFile copy = file;
  OrderSpec spec = file.order.value_or(OrderSpec{});
  if (options.tiebreak.has_value()) spec.tiebreak = *options.tiebreak;
  if (options.permutation.has_value()) spec.permutation = *options.permutation;
  copy.order = spec;
  return copy.Order();
}

Json CmdToric(const ProblemFile& file, const CommandOptions& options) {
  Json report = MakeReport("toric", file, options);
  Json& r = report["results"];
  const SemigroupPresentation s(file.generators);
  const std::vector<std::string> labels = file.VariableLabels();
  r["pointed"] = s.pointed();
  r["functional"] = s.pointed() ? ToJson(s.functional()) : Json(nullptr);
  r["full_lattice"] = s.full_lattice();
  r["smith_invariants"] = ToJson(SmithInvariants(file.generators));
  r["warnings"] = file.generators.warnings();
  const std::vector<Binomial> gens = ToricIdeal(s);
  r["toric_ideal"] = ToJson(gens, labels);
  if (s.pointed() && !s.has_zero_generator()) {
    std::vector<Binomial> minimal;
    for (const GradedGenerators& g : MinimalGenerators(gens, file.generators)) {
      minimal.insert(minimal.end(), g.generators.begin(), g.generators.end());
    }
    r["minimal_generators"] = ToJson(minimal, labels);
  }
  const TermOrder order = EffectiveOrder(file, options);
  Json gb;
  gb["order"] = ToJson(order);
  gb["elements"] = ToJson(Buchberger(gens, order).elements, labels);
  r["groebner_basis"] = std::move(gb);
  return report;
}

Json CmdDegenerate(const ProblemFile& file, const CommandOptions& options) {
  Json report = MakeReport("degenerate", file, options);
  Json& r = report["results"];
  const DegenerationContext ctx(SemigroupPresentation(file.generators),
                                RequireWeights(file));
  const std::vector<std::string> labels = file.VariableLabels();
  const std::vector<std::string> labels_t = file.VariableLabels(true);
  Json aw = Json::array();
  for (const IntVector& c : ctx.a_w().columns()) aw.push_back(ToJson(c));
  r["A_w"] = std::move(aw);
  const TermOrder order = EffectiveOrder(file, options);
  r["groebner_basis"] = ToJson(RefinedGroebnerBasis(ctx, order).elements, labels);
  const TheoremMainReport main = VerifyTheoremMain(ctx, order);
  r["degenerated_generators"] = ToJson(main.degenerated_generators, labels_t);
  Json verdict;
  verdict["equal"] = main.equal;
  verdict["degenerated_basis"] = ToJson(main.degenerated_basis.elements, labels_t);
  verdict["toric_aw_basis"] = ToJson(main.toric_aw_basis.elements, labels_t);
  r["theorem_main"] = std::move(verdict);
  return report;
}

Json CmdInvariants(const ProblemFile& file, InvariantKind which,
                   const CommandOptions& options) {
  static constexpr const char* kNames[] = {"betti", "saturation", "approx", "unique"};
  Json report = MakeReport(std::string("invariants ") + kNames[static_cast<int>(which)],
                           file, options);
  Json& r = report["results"];
  const SemigroupPresentation s(file.generators);
  const std::vector<std::string> labels = file.VariableLabels();
  const std::vector<std::string> labels_t = file.VariableLabels(true);
  std::optional<DegenerationContext> ctx;
  if (file.weights.has_value()) ctx.emplace(s, *file.weights);

  switch (which) {
    case InvariantKind::kBetti:
    case InvariantKind::kUnique: {
      if (ctx.has_value()) {
        const InclusionReport inc = CheckTheoremInclusion(*ctx);
        r["base"] = BettiJson(inc.base, labels);
        r["degenerated"] = BettiJson(inc.degenerated, labels_t);
        Json lifts = Json::array();
        for (const auto& [b, lambdas] : inc.lambdas) {
          Json e;
          e["b"] = ToJson(b);
          e["lambdas"] = ToJson(IntVector(lambdas.begin(), lambdas.end()));
          lifts.push_back(std::move(e));
        }
        r["inclusion"] = std::move(lifts);
        r["extra"] = ToJson(inc.extra);
      } else {
        r["base"] = BettiJson(BettiElements(s), labels);
      }
      if (which == InvariantKind::kUnique) {
        Json brief;
        brief["base"] = r["base"]["uniquely_presented"];
        if (ctx.has_value()) brief["degenerated"] = r["degenerated"]["uniquely_presented"];
        r["uniquely_presented"] = std::move(brief);
      }
      break;
    }
    case InvariantKind::kSaturation:
      r["base"] = SaturationJson(IsSaturated(s));
      if (ctx.has_value()) r["degenerated"] = SaturationJson(IsSaturated(ctx->degenerated()));
      break;
    case InvariantKind::kApprox: {
      const IntVector a = ApproximationElement(s);
      r["approximation_element"] = ToJson(a);
      if (ctx.has_value()) {
        const ApproximationCertificate cert = ApproxDegeneration(*ctx, a);
        Json c;
        c["a"] = ToJson(cert.a);
        c["a_representation"] = ToJson(cert.a_representation);
        c["delta"] = ToJson(cert.delta);
        Json points = Json::array();
        for (const ZonotopeCase& zc : cert.per_point) {
          Json p;
          p["point"] = ToJson(zc.point);
          p["case"] = zc.tag;
          p["delta"] = ToJson(zc.delta);
          points.push_back(std::move(p));
        }
        c["per_point"] = std::move(points);
        constexpr std::size_t kSamples = 100;
        const std::optional<IntVector> bad =
            SampleCertificate(*ctx, cert, kSamples, options.seed);
        Json sampled;
        sampled["samples"] = kSamples;
        sampled["failure"] = bad.has_value() ? ToJson(*bad) : Json(nullptr);
        c["sampled"] = std::move(sampled);
        r["certificate"] = std::move(c);
      }
      break;
    }
  }
  return report;
}

Json CmdMoebius(const ProblemFile& file, const IntVector& z,
                const std::optional<Integer>& lambda, const CommandOptions& options) {
  Json report = MakeReport("moebius", file, options);
  Json& r = report["results"];
  const SemigroupPresentation s(file.generators);
  const std::optional<MoebiusContext> ctx =
      file.weights.has_value() ? MoebiusContext(s, *file.weights) : MoebiusContext(s);
  r["z"] = ToJson(z);
  const Integer brute = MuBruteForce(s, z);
  r["mu_bruteforce"] = ToJson(brute);
  Json closed;
  if (ctx->closed_formula_obstruction().empty()) {
    const Integer value = MuClosed(*ctx, z, options.max_n);
    closed["value"] = ToJson(value);
    closed["agreement"] = value == brute;
    closed["A_z"] = WitnessJson(Az(*ctx, z, options.max_n));
  } else {
    closed["value"] = nullptr;
    closed["note"] = "brute force only: " + ctx->closed_formula_obstruction();
  }
  r["closed_formula"] = std::move(closed);
  if (lambda.has_value()) {
    RequireWeights(file);
    IntVector zl = z;
    zl.push_back(*lambda);
    r["lambda"] = ToJson(*lambda);
    const Integer brute_w = MuBruteForce(*ctx->degenerated(), zl);
    r["mu_bruteforce_w"] = ToJson(brute_w);
    Json deg;
    if (ctx->d_w().has_value()) {
      const Integer value = MuDegeneration(*ctx, z, *lambda, options.max_n);
      deg["d_w"] = ToJson(*ctx->d_w());
      deg["value"] = ToJson(value);
      deg["agreement"] = value == brute_w;
      deg["B_z"] = WitnessJson(Bz(*ctx, z, *lambda, options.max_n));
    } else {
      deg["value"] = nullptr;
      deg["note"] = "brute force only: " + ctx->degeneration_obstruction();
    }
    r["degenerated_formula"] = std::move(deg);
  }
  return report;
}

std::string RenderText(const Json& report) {
  std::ostringstream out;
  RenderValue(report, 0, out);
  return out.str();
}

IntVector ParseIntegerList(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (c != ' ') body.push_back(c);
  }
  if (body.size() >= 2 && ((body.front() == '(' && body.back() == ')') ||
                           (body.front() == '[' && body.back() == ']'))) {
    body = body.substr(1, body.size() - 2);
  }
  IntVector out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    out.push_back(ParseInteger(body.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace toricdegen::tools
