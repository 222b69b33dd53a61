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
#include "toricdegen/problem_file.h"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "toricdegen/errors.h"

namespace toricdegen {
namespace {

const std::set<std::string> kKnownKeys = {"name",   "dimension", "generators",
                                          "weights", "order",    "labels"};

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Schema errors point at the first occurrence of the offending key.
class SchemaContext {
 public:
  explicit SchemaContext(std::string_view text) : text_(text) {}

  [[noreturn]] void Fail(std::string_view key, const std::string& message) const {
    std::size_t offset = 0;
    if (!key.empty()) {
      const std::size_t pos = text_.find("\"" + std::string(key) + "\"");
      if (pos != std::string_view::npos) offset = pos;
    }
    const auto [line, column] = LineColumn(text_, offset);
    throw ParseError(message, line, column);
  }

  Integer ReadInteger(const Json& j, std::string_view key) const {
    if (j.is_string()) {
      try {
        return ParseInteger(j.get<std::string>());
      } catch (const ParseError&) {
        Fail(key, "'" + std::string(key) + "': \"" + j.get<std::string>() +
                      "\" is not a decimal integer");
      }
    }
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    Fail(key, "'" + std::string(key) + "' must hold integers as decimal strings");
  }

  IntVector ReadVector(const Json& j, std::string_view key) const {
    if (!j.is_array()) Fail(key, "'" + std::string(key) + "' must be an array");
    IntVector v;
    for (const Json& e : j) v.push_back(ReadInteger(e, key));
    return v;
  }

 private:
  std::string_view text_;
};

}  // namespace

std::vector<std::string> ProblemFile::VariableLabels(bool with_t) const {
  std::vector<std::string> out =
      labels.has_value() ? *labels : DefaultLabels(generators.count());
  if (with_t) out.push_back("t");
  return out;
}

TermOrder ProblemFile::Order() const {
  const IntVector w = weights.value_or(ZeroVector(generators.count()));
  const OrderSpec spec = order.value_or(OrderSpec{});
  return TermOrder(w, spec.tiebreak, spec.permutation);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = LineColumn(text, offset);
    std::string what = e.what();
    const std::size_t colon = what.find(": ");
    throw ParseError(colon == std::string::npos ? what : what.substr(colon + 2), line,
                     column);
  }
}

ProblemFile ParseProblemFile(std::string_view text) {
  const Json j = ParseJson(text);
  const SchemaContext ctx(text);
  if (!j.is_object()) ctx.Fail("", "a problem file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (kKnownKeys.count(key) == 0) ctx.Fail(key, "unknown key '" + key + "'");
  }
  ProblemFile file;
  if (j.contains("name")) {
    if (!j["name"].is_string()) ctx.Fail("name", "'name' must be a string");
    file.name = j["name"].get<std::string>();
  }
  if (!j.contains("generators")) ctx.Fail("", "missing required key 'generators'");
  const Json& gens = j["generators"];
  if (!gens.is_array()) ctx.Fail("generators", "'generators' must be an array of columns");
  std::vector<IntVector> columns;
  for (const Json& col : gens) columns.push_back(ctx.ReadVector(col, "generators"));
  std::optional<std::size_t> dim;
  if (j.contains("dimension")) {
    const Integer d = ctx.ReadInteger(j["dimension"], "dimension");
    if (d < 0) ctx.Fail("dimension", "'dimension' must be nonnegative");
    dim = static_cast<std::size_t>(d);
  }
  if (!dim.has_value()) {
    if (columns.empty()) ctx.Fail("generators", "no generators and no 'dimension'");
    dim = columns.front().size();
  }
  try {
    file.generators = GeneratorMatrix(*dim, std::move(columns));
  } catch (const DimensionMismatch& e) {
    ctx.Fail("generators", e.what());
  }
  if (j.contains("weights")) {
    file.weights = ctx.ReadVector(j["weights"], "weights");
    if (file.weights->size() != file.generators.count()) {
      ctx.Fail("weights", "'weights' has " + std::to_string(file.weights->size()) +
                              " entries for " + std::to_string(file.generators.count()) +
                              " generators");
    }
    if (!IsNonNegative(*file.weights)) ctx.Fail("weights", "weights must be nonnegative");
  }
  if (j.contains("order")) {
    const Json& o = j["order"];
    if (!o.is_object()) ctx.Fail("order", "'order' must be an object");
    OrderSpec spec;
    for (const auto& [key, value] : o.items()) {
      if (key != "tiebreak" && key != "permutation") {
        ctx.Fail(key, "unknown key '" + key + "' in 'order'");
      }
    }
    if (o.contains("tiebreak")) {
      if (!o["tiebreak"].is_string()) ctx.Fail("tiebreak", "'tiebreak' must be a string");
      try {
        spec.tiebreak = ParseTieBreak(o["tiebreak"].get<std::string>());
      } catch (const ParseError& e) {
        ctx.Fail("tiebreak", e.what());
      }
    }
    if (o.contains("permutation")) {
      for (const Integer& p : ctx.ReadVector(o["permutation"], "permutation")) {
        if (p < 0) ctx.Fail("permutation", "negative index in 'permutation'");
        spec.permutation.push_back(static_cast<std::size_t>(p));
      }
    }
    try {
      TermOrder(ZeroVector(file.generators.count()), TieBreak::kLex, spec.permutation);
    } catch (const Error& e) {
      ctx.Fail("permutation", e.what());
    }
    file.order = std::move(spec);
  }
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array()) ctx.Fail("labels", "'labels' must be an array of strings");
    std::vector<std::string> labels;
    for (const Json& e : l) {
      if (!e.is_string()) ctx.Fail("labels", "'labels' must be an array of strings");
      labels.push_back(e.get<std::string>());
    }
    if (labels.size() != file.generators.count()) {
      ctx.Fail("labels", "'labels' must name every generator");
    }
    file.labels = std::move(labels);
  }
  return file;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemFile LoadProblemFile(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseProblemFile(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.line(), e.column(), path.string());
  }
}

std::string PrintProblemFile(const ProblemFile& file) {
  Json j;
  j["name"] = file.name;
  j["dimension"] = file.generators.ambient_dim();
  Json cols = Json::array();
  for (const IntVector& c : file.generators.columns()) cols.push_back(ToJson(c));
  j["generators"] = std::move(cols);
  if (file.weights.has_value()) j["weights"] = ToJson(*file.weights);
  if (file.order.has_value()) {
    Json o;
    o["tiebreak"] = std::string(TieBreakName(file.order->tiebreak));
    o["permutation"] = file.order->permutation;
    j["order"] = std::move(o);
  }
  if (file.labels.has_value()) j["labels"] = *file.labels;
  return j.dump(2) + "\n";
}

Json ToJson(const Integer& v) { return v.str(); }

Json ToJson(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(x.str());
  return out;
}

Json ToJson(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const IntVector& v : vs) out.push_back(ToJson(v));
  return out;
}

Json ToJson(const std::vector<Binomial>& gens, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const Binomial& b : gens) out.push_back(FormatBinomial(b, labels));
  return out;
}

Json ToJson(const TermOrder& order) {
  Json j;
  j["weight"] = ToJson(order.weight());
  j["tiebreak"] = std::string(TieBreakName(order.tiebreak()));
  j["permutation"] = order.permutation();
  return j;
}

IntVector IntVectorFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  IntVector v;
  for (const Json& e : j) {
    if (e.is_string()) v.push_back(ParseInteger(e.get<std::string>()));
    else if (e.is_number_integer()) v.push_back(Integer(e.get<long long>()));
    else throw ParseError("expected an integer");
  }
  return v;
}

std::vector<Binomial> BinomialsFromJson(const Json& j,
                                        const std::vector<std::string>& labels) {
  if (!j.is_array()) throw ParseError("expected an array of binomials");
  std::vector<Binomial> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw ParseError("binomials are written as strings");
    out.push_back(ParseBinomial(e.get<std::string>(), labels));
  }
  return out;
}

}  // namespace toricdegen
