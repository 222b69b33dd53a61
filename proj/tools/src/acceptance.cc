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
#include "acceptance.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "toricdegen/families.h"
#include "toricdegen/groebner.h"
#include "toricdegen/moebius.h"
#include "toricdegen/semigroup.h"
#include "toricdegen/toric.h"

namespace toricdegen::tools {
namespace {

constexpr double kTheoremMainBudgetSeconds = 60;
constexpr double kMoebiusBudgetSeconds = 120;
constexpr std::size_t kRandomInstances = 50;
constexpr std::size_t kLemmaSamples = 200;
constexpr std::size_t kCertificateSamples = 100;
constexpr std::size_t kMaxFiberPoints = 500;
constexpr std::size_t kMaxFiberDegrees = 300;

class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& note) { notes_.push_back(note); }
  bool ok() const { return failures_.empty(); }

  std::string Detail() const {
    std::ostringstream out;
    if (failures_.empty()) {
      out << checks_ << " checks";
    } else {
      out << failures_.size() << " of " << checks_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) {
        out << (i ? "; " : "") << failures_[i];
      }
      if (failures_.size() > 4) out << "; ...";
    }
    for (const std::string& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Str(const IntVector& v) { return ToString(v); }

std::set<std::string> Formatted(const std::vector<Binomial>& gens,
                                const std::vector<std::string>& labels) {
  std::set<std::string> out;
  for (const Binomial& g : gens) out.insert(FormatBinomial(g, labels));
  return out;
}

std::set<IntVector> AsSet(const std::vector<IntVector>& v) {
  return std::set<IntVector>(v.begin(), v.end());
}

std::vector<IntVector> VectorsFromJson(const Json& j) {
  std::vector<IntVector> out;
  for (const Json& e : j) out.push_back(IntVectorFromJson(e));
  return out;
}

const CorpusEntry* Find(const std::vector<CorpusEntry>& corpus, const std::string& stem) {
  for (const CorpusEntry& e : corpus) {
    if (e.stem == stem) return &e;
  }
  return nullptr;
}

const CorpusEntry& Require(const std::vector<CorpusEntry>& corpus, const std::string& stem) {
  const CorpusEntry* e = Find(corpus, stem);
  if (e == nullptr) throw Error("corpus entry '" + stem + "' is missing");
  return *e;
}

bool FiniteFibers(const SemigroupPresentation& s) {
  return s.pointed() && !s.has_zero_generator();
}

std::vector<RandomInstance> RandomInstances(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  for (std::size_t i = 0; i < kRandomInstances; ++i) out.push_back(DrawRandomInstance(rng));
  return out;
}

std::string Describe(const RandomInstance& r) {
  std::string s = "A=";
  for (const IntVector& c : r.a.columns()) s += Str(c);
  return s + " w=" + Str(r.w);
}

// Weights for the interval_even family, two per case.
struct Grob1Weight {
  Grob1Case expected;
  IntVector w;
};

std::vector<Grob1Weight> Grob1Weights(long long q) {
  return {
      {Grob1Case::k1, {1, 3, 1}},
      {Grob1Case::k1, {0, 1, 0}},
      {Grob1Case::k2a, {1, 0, 0}},
      {Grob1Case::k2a, {2, 1, 2}},
      {Grob1Case::k2b, {q + 2, 0, q + 2}},
      {Grob1Case::k2b, {q + 1, 0, q + 2}},
      {Grob1Case::k3a, {0, 1, 3}},
      {Grob1Case::k3a, {1, 2, 9}},
      {Grob1Case::k3b, {q + 1, 0, q + 3}},
      {Grob1Case::k3b, {1, 1, 3}},
  };
}

// ---------------------------------------------------------------------------
// Criterion 0: every expected-results sidecar.

class EntryFacts {
 public:
  explicit EntryFacts(const CorpusEntry& e)
      : e_(e), s_(e.file.generators), labels_(e.file.VariableLabels()),
        labels_t_(e.file.VariableLabels(true)) {
    if (e.file.weights.has_value()) ctx_.emplace(s_, *e.file.weights);
  }

  const SemigroupPresentation& S() const { return s_; }
  const DegenerationContext& Ctx() const {
    if (!ctx_.has_value()) throw Error("the problem file has no weights");
    return *ctx_;
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& labels_t() const { return labels_t_; }

  const BettiReport& Betti() {
    if (!betti_.has_value()) betti_ = BettiElements(s_);
    return *betti_;
  }
  const BettiReport& BettiW() {
    if (!betti_w_.has_value()) betti_w_ = BettiElements(Ctx().degenerated());
    return *betti_w_;
  }

 private:
  const CorpusEntry& e_;
  SemigroupPresentation s_;
  std::optional<DegenerationContext> ctx_;
  std::vector<std::string> labels_, labels_t_;
  std::optional<BettiReport> betti_, betti_w_;
};

void CheckSidecarKey(const CorpusEntry& e, EntryFacts& f, const std::string& key,
                     const Json& value, Checker& c) {
  const std::string where = e.stem + "." + key;
  const std::size_t n = e.file.generators.count();
  if (key == "toric_ideal") {
    c.Expect(IdealEqual(BinomialsFromJson(value, f.labels()), ToricIdeal(f.S()), n), where);
  } else if (key == "groebner_basis") {
    const GroebnerBasis gb = Buchberger(ToricIdeal(f.S()), e.file.Order());
    c.Expect(Formatted(gb.elements, f.labels()) ==
                 Formatted(BinomialsFromJson(value, f.labels()), f.labels()),
             where);
  } else if (key == "degenerated_ideal") {
    c.Expect(IdealEqual(BinomialsFromJson(value, f.labels_t()),
                        DegenerateIdeal(f.Ctx(), e.file.Order()), n + 1),
             where);
  } else if (key == "degenerated_generators") {
    c.Expect(Formatted(DegenerateIdeal(f.Ctx(), e.file.Order()), f.labels_t()) ==
                 Formatted(BinomialsFromJson(value, f.labels_t()), f.labels_t()),
             where);
  } else if (key == "theorem_main") {
    c.Expect(VerifyTheoremMain(f.Ctx(), e.file.Order()).equal == value.get<bool>(), where);
  } else if (key == "betti") {
    c.Expect(AsSet(f.Betti().betti) == AsSet(VectorsFromJson(value)), where);
  } else if (key == "betti_w") {
    c.Expect(AsSet(f.BettiW().betti) == AsSet(VectorsFromJson(value)), where);
  } else if (key == "uniquely_presented") {
    c.Expect(f.Betti().uniquely_presented == value.get<bool>(), where);
  } else if (key == "uniquely_presented_w") {
    c.Expect(f.BettiW().uniquely_presented == value.get<bool>(), where);
  } else if (key == "saturated") {
    c.Expect(IsSaturated(f.S()).saturated == value.get<bool>(), where);
  } else if (key == "saturated_w") {
    c.Expect(IsSaturated(f.Ctx().degenerated()).saturated == value.get<bool>(), where);
  } else if (key == "saturation_witness_w") {
    const SaturationReport r = IsSaturated(f.Ctx().degenerated());
    c.Expect(r.witness.has_value() && *r.witness == IntVectorFromJson(value), where);
  } else if (key == "approximation_element") {
    c.Expect(ApproximationElement(f.S()) == IntVectorFromJson(value), where);
  } else if (key == "moebius") {
    for (const Json& item : value) {
      const IntVector z = IntVectorFromJson(item.at("z"));
      const Integer mu = ParseInteger(item.at("mu").get<std::string>());
      c.Expect(MuBruteForce(f.S(), z) == mu, where + " z=" + Str(z));
    }
  } else {
    c.Expect(false, where + ": unknown key");
  }
}

void CriterionCorpus(const std::vector<CorpusEntry>& corpus, Checker& c) {
  std::size_t sidecars = 0;
  for (const CorpusEntry& e : corpus) {
    c.Expect(ParseProblemFile(PrintProblemFile(e.file)) == e.file, e.stem + " round trip");
    if (!e.expected.has_value()) continue;
    ++sidecars;
    EntryFacts facts(e);
    for (const auto& [key, value] : e.expected->items()) {
      try {
        CheckSidecarKey(e, facts, key, value, c);
      } catch (const std::exception& ex) {
        c.Expect(false, e.stem + "." + key + ": " + ex.what());
      }
    }
  }
  c.Note(std::to_string(corpus.size()) + " entries, " + std::to_string(sidecars) +
         " sidecars");
}

// ---------------------------------------------------------------------------
// Criterion 1: (I_A)_t = I_{A_w}.

void CriterionTheoremMain(const std::vector<CorpusEntry>& corpus, std::uint64_t seed,
                          Checker& c) {
  const auto start = Clock::now();
  auto verify = [&](const std::string& name, const GeneratorMatrix& a, const IntVector& w,
                    const TermOrder& order) {
    const DegenerationContext ctx(SemigroupPresentation(a), w);
    const TheoremMainReport r = VerifyTheoremMain(ctx, order);
    c.Expect(r.equal, name);
    c.Expect(IdealEqual(DehomogenizeT(r.degenerated_generators), ToricIdeal(ctx.base()),
                        a.count()),
             name + " (t = 1)");
  };
  for (const std::string stem : {"example_1-1", "example_scroll"}) {
    const ProblemFile& f = Require(corpus, stem).file;
    verify(stem, f.generators, f.weights.value(), f.Order());
  }
  for (long long m = 1; m <= 5; ++m) {
    verify("A(" + std::to_string(m) + ")", AOfM(m).generators, {1, 1, 1},
           TermOrder({1, 1, 1}, TieBreak::kLex));
  }
  for (long long q = 1; q <= 4; ++q) {
    std::set<Grob1Case> seen;
    for (const Grob1Weight& gw : Grob1Weights(q)) {
      if (!seen.insert(gw.expected).second) continue;
      verify("interval_even(" + std::to_string(q) + ") w=" + Str(gw.w),
             IntervalEven(q).generators, gw.w, TermOrder(gw.w, TieBreak::kDegRevLex));
    }
  }
  for (const IntVector& w : {IntVector{15, 10, 6}, IntVector{1, 1, 1}}) {
    verify("pairwise_coprime(2,3,5) w=" + Str(w), PairwiseCoprime({2, 3, 5}).generators,
           w, TermOrder(w, TieBreak::kLex));
  }
  for (const RandomInstance& r : RandomInstances(seed)) {
    verify("random " + Describe(r), r.a, r.w, TermOrder(r.w, TieBreak::kLex));
  }
  const double seconds = Since(start);
  c.Expect(seconds < kTheoremMainBudgetSeconds, "runtime budget");
}

// ---------------------------------------------------------------------------
// Criteria 2 and 3: the worked examples.

void CriterionExample11(const std::vector<CorpusEntry>& corpus, Checker& c) {
  const ProblemFile& f = Require(corpus, "example_1-1").file;
  const DegenerationContext ctx(SemigroupPresentation(f.generators), f.weights.value());
  const InclusionReport inc = CheckTheoremInclusion(ctx);
  c.Expect(AsSet(inc.base.betti) == std::set<IntVector>{{30}}, "Bet(S) = {30}");
  c.Expect(AsSet(inc.degenerated.betti) == std::set<IntVector>{{30, 5}, {30, 3}},
           "Bet(S_w) = {(30,5), (30,3)}");
  c.Expect(inc.lambdas.size() == 1 && inc.lambdas.begin()->second ==
                                          std::vector<Integer>{3, 5},
           "30 lifts with λ in {3, 5}");
}

void CriterionScroll(const std::vector<CorpusEntry>& corpus, Checker& c) {
  const ProblemFile& f = Require(corpus, "example_scroll").file;
  const std::vector<std::string> labels = f.VariableLabels();
  const std::vector<std::string> labels_t = f.VariableLabels(true);
  const DegenerationContext ctx(SemigroupPresentation(f.generators), f.weights.value());
  const TermOrder order = f.Order();
  auto parse = [](const std::vector<std::string>& texts,
                  const std::vector<std::string>& l) {
    std::vector<Binomial> out;
    for (const std::string& t : texts) out.push_back(ParseBinomial(t, l));
    return out;
  };
  const std::vector<Binomial> gb = RefinedGroebnerBasis(ctx, order).elements;
  c.Expect(Formatted(gb, labels) ==
               Formatted(parse({"b^2 - a*c", "b*c - a*d", "b*d - c^2", "a*d^2 - c^3"},
                               labels),
                         labels),
           "reduced GB {b²−ac, bc−ad, bd−c², ad²−c³}");
  const BettiReport bw =
      BettiElementsFromGenerators(ctx.degenerated(), DegenerateIdeal(ctx, order));
  c.Expect(Formatted(bw.generators_used, labels_t) ==
               Formatted(parse({"b^2 - a*c*t^9", "b*c - a*d*t", "b*d - c^2*t^8",
                                "a*d^2 - c^3*t^7"},
                               labels_t),
                         labels_t),
           "degenerated minimal generators");
  c.Expect(AsSet(bw.betti) ==
               std::set<IntVector>{{2, 2, 14}, {2, 3, 9}, {2, 4, 12}, {3, 6, 13}},
           "Bet(S_w)");
  c.Expect(AsSet(BettiElements(ctx.degenerated()).betti) == AsSet(bw.betti),
           "Bet(S_w) from I_{A_w} directly");
}

// ---------------------------------------------------------------------------
// Criterion 4: saturation of A(m)_w.

void CriterionSaturation(Checker& c) {
  for (long long m = 1; m <= 8; ++m) {
    const std::string name = "A(" + std::to_string(m) + ")_w";
    const DegenerationContext ctx(SemigroupPresentation(AOfM(m).generators), {1, 1, 1});
    const SemigroupPresentation& sw = ctx.degenerated();
    const SaturationReport r = IsSaturated(sw);
    if (m <= 2) {
      c.Expect(r.saturated, name + " saturated");
      continue;
    }
    c.Expect(!r.saturated && r.witness.has_value(), name + " not saturated");
    if (!r.witness.has_value()) continue;
    c.Expect(ConeMember(*r.witness, sw.generators()).member &&
                 !Member(sw, *r.witness).has_value(),
             name + " witness " + Str(*r.witness) + " verified");
    if (m % 2 == 1) {
      std::set<IntVector> failing;
      for (const IntVector& p : ZonotopePoints(sw.generators())) {
        if (!Member(sw, p).has_value()) failing.insert(p);
      }
      c.Expect(failing.count({2, 2, 1}) == 1, name + " (2,2,1) among the non-members");
      c.Expect(ConeMember({2, 2, 1}, sw.generators()).member, name + " (2,2,1) in the cone");
      const IntVector lift = {m + 1, m + 1, (m - 1) / 2 + 1};
      c.Expect(Member(sw, lift).has_value(), name + " " + Str(lift) + " is a member");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 5: the interval_even Groebner bases.

void CriterionGrob1(Checker& c) {
  for (long long q = 1; q <= 3; ++q) {
    for (const Grob1Weight& gw : Grob1Weights(q)) {
      const UniquePresentationCheck r = CheckUniquePresentationFamily(q, gw.w);
      const std::string name = "q=" + std::to_string(q) + " w=" + Str(gw.w) + " case " +
                               r.classification.Tag();
      c.Expect(r.classification.kind == gw.expected,
               name + " expected case " + std::string(Grob1CaseName(gw.expected)));
      c.Expect(r.shape_matches, name + ": GB shape differs from the listed basis");
      c.Expect(r.uniquely_presented, name + ": I_{A_w} not uniquely presented");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: Betti elements lift, and |B_z| <= |A_z|.

struct MoebiusInstance {
  std::string name;
  GeneratorMatrix a;
  IntVector w;
};

std::vector<MoebiusInstance> MoebiusInstances() {
  return {
      {"pairwise_coprime(2,3)", PairwiseCoprime({2, 3}).generators, {3, 2}},
      {"pairwise_coprime(2,3,5)", PairwiseCoprime({2, 3, 5}).generators, {15, 10, 6}},
      {"pairwise_coprime(2,3,7)", PairwiseCoprime({2, 3, 7}).generators, {21, 14, 6}},
      {"pairwise_coprime(3,4,5)", PairwiseCoprime({3, 4, 5}).generators, {20, 15, 12}},
      {"A(1)", AOfM(1).generators, {1, 1, 1}},
      {"A(2)", AOfM(2).generators, {1, 1, 1}},
      {"A(3)", AOfM(3).generators, {2, 0, 1}},
  };
}

void CheckLemmas(const MoebiusContext& ctx, const std::string& name, std::mt19937_64& rng,
                 Checker& c) {
  const GeneratorMatrix& aw = ctx.degenerated()->generators();
  const std::size_t n = ctx.semigroup().count();
  for (std::size_t sample = 0; sample < kLemmaSamples; ++sample) {
    IntVector zl = ZeroVector(aw.ambient_dim());
    for (const IntVector& col : aw.columns()) {
      zl = Add(zl, Scale(static_cast<long long>(rng() % 4), col));
    }
    const IntVector z(zl.begin(), zl.end() - 1);
    const Integer lambda = zl.back();
    const std::vector<SubsetWitness> az = Az(ctx, z);
    const std::vector<SubsetWitness> bz = Bz(ctx, z, lambda);
    const std::string at = name + " (z,λ)=" + Str(zl);
    c.Expect(bz.size() <= az.size(), at + " |B_z| <= |A_z|");
    std::set<std::vector<std::size_t>> projections;
    for (const SubsetWitness& b : bz) {
      std::vector<std::size_t> proj;
      for (std::size_t i : b.subset) {
        if (i != n) proj.push_back(i);
      }
      projections.insert(proj);
      const auto it = std::find_if(az.begin(), az.end(),
                                   [&](const SubsetWitness& a) { return a.subset == proj; });
      c.Expect(it != az.end() && it->k == b.k, at + " projection lands in A_z");
    }
    c.Expect(projections.size() == bz.size(), at + " projection injective");
    bool hit = false;
    for (const SubsetWitness& a : az) hit = hit || lambda == *a.l || lambda == *a.l + 1;
    c.Expect(hit == !bz.empty(), at + " B_z nonempty iff λ in {l_j, l_j + 1}");
  }
}

void CriterionInclusion(const std::vector<CorpusEntry>& corpus, std::uint64_t seed,
                        Checker& c) {
  auto lift = [&](const std::string& name, const GeneratorMatrix& a, const IntVector& w,
                  bool betti_min) {
    const SemigroupPresentation s(a);
    if (!FiniteFibers(s)) return;
    try {
      const InclusionReport r = CheckTheoremInclusion(DegenerationContext(s, w));
      c.Expect(true, name);
      if (betti_min) {
        const std::set<IntVector> minimal = AsSet(r.degenerated.betti_minimal);
        for (const auto& [b, lambdas] : r.lambdas) {
          for (const Integer& l : lambdas) {
            IntVector bl = b;
            bl.push_back(l);
            c.Expect(minimal.count(bl) == 1, name + " " + Str(bl) + " Betti-minimal");
          }
        }
      }
    } catch (const TheoryViolation& e) {
      c.Expect(false, name + ": " + e.what());
    }
  };
  for (const CorpusEntry& e : corpus) {
    if (e.file.weights.has_value()) lift(e.stem, e.file.generators, *e.file.weights, false);
  }
  for (const RandomInstance& r : RandomInstances(seed)) lift(Describe(r), r.a, r.w, false);
  for (long long q = 2; q <= 4; ++q) {
    for (const IntVector& w : {IntVector{1, 2, 1}, IntVector{0, 1, 0}, IntVector{2, 3, 1}}) {
      lift("interval_odd(" + std::to_string(q) + ") w=" + Str(w), IntervalOdd(q).generators,
           w, true);
    }
  }
  const GeneratorMatrix lawrence = Lawrence(GeneratorMatrix::Numerical({1, 2})).generators;
  lift("lawrence(1,2) w=(1,2,0,3)", lawrence, {1, 2, 0, 3}, true);
  lift("lawrence(1,2) w=(5,0,1,1)", lawrence, {5, 0, 1, 1}, true);

  std::mt19937_64 rng(seed);
  for (const MoebiusInstance& inst : MoebiusInstances()) {
    const MoebiusContext ctx(SemigroupPresentation(inst.a), inst.w);
    c.Expect(ctx.d_w().has_value(), inst.name + " is Möbius-eligible");
    if (ctx.d_w().has_value()) CheckLemmas(ctx, inst.name, rng, c);
  }
}

// ---------------------------------------------------------------------------
// Criterion 7: approximation certificates.

void CriterionApprox(std::uint64_t seed, Checker& c) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, GeneratorMatrix>> cases = {
      {"<2,3>", GeneratorMatrix::Numerical({2, 3})},
      {"<6,10,15>", GeneratorMatrix::Numerical({6, 10, 15})},
  };
  for (long long m = 1; m <= 4; ++m) {
    cases.emplace_back("A(" + std::to_string(m) + ")", AOfM(m).generators);
  }
  for (const auto& [name, a] : cases) {
    const SemigroupPresentation s(a);
    const IntVector approx = ApproximationElement(s);
    IntVector random_w;
    for (std::size_t i = 0; i < a.count(); ++i) random_w.push_back(static_cast<long long>(rng() % 9));
    for (const IntVector& w : {IntVector(a.count(), 1), random_w}) {
      const std::string at = name + " w=" + Str(w) + " a=" + Str(approx);
      try {
        const DegenerationContext ctx(s, w);
        const ApproximationCertificate cert = ApproxDegeneration(ctx, approx);
        const std::optional<IntVector> bad =
            SampleCertificate(ctx, cert, kCertificateSamples, rng());
        c.Expect(!bad.has_value(),
                 at + " δ=" + cert.delta.str() +
                     (bad.has_value() ? " fails at " + Str(*bad) : std::string()));
      } catch (const Error& e) {
        c.Expect(false, at + ": " + e.what());
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: Möbius formulas against brute force.

void CriterionMoebius(Checker& c) {
  const auto start = Clock::now();
  for (const std::vector<long long>& b :
       {std::vector<long long>{2, 3}, std::vector<long long>{2, 5},
        std::vector<long long>{2, 3, 5}, std::vector<long long>{2, 3, 7},
        std::vector<long long>{3, 4, 5}}) {
    const FamilyInstance f = PairwiseCoprime(b);
    const SemigroupPresentation s(f.generators);
    const MoebiusContext ctx(s);
    const MoebiusTable table(s, 60);
    for (long long z = 0; z <= 60; ++z) {
      c.Expect(MuClosed(ctx, {z}) == table.Mu({z}), f.name + " z=" + std::to_string(z));
    }
  }
  {
    const MoebiusContext ctx(SemigroupPresentation(GeneratorMatrix::Numerical({4, 6, 9})));
    c.Expect(!ctx.closed_formula_obstruction().empty(), "<4,6,9> is refused");
    c.Note("<4,6,9> has Betti elements {12, 18}; the closed formula does not apply");
  }
  const SemigroupPresentation s(PairwiseCoprime({2, 3, 5}).generators);
  const MoebiusContext ctx(s, {15, 10, 6});
  c.Expect(ctx.d_w().has_value() && *ctx.d_w() == 30, "d_w = 30");
  if (ctx.d_w().has_value()) {
    const MoebiusTable table(*ctx.degenerated(), 90);
    for (const IntVector& zl : table.elements()) {
      const IntVector z(zl.begin(), zl.end() - 1);
      c.Expect(MuDegeneration(ctx, z, zl.back()) == table.Mu(zl), "(z,λ)=" + Str(zl));
    }
    c.Note(std::to_string(table.elements().size()) + " elements of S_w");
  }
  c.Expect(Since(start) < kMoebiusBudgetSeconds, "runtime budget");
}

// ---------------------------------------------------------------------------
// Criterion 9: Lawrence degenerations.

void CriterionLawrence(std::uint64_t seed, Checker& c) {
  std::mt19937_64 rng(seed);
  std::size_t instances = 0;
  while (instances < 5) {
    const std::size_t d = 1 + rng() % 2;
    const std::size_t n = 2 + rng() % 2;
    std::vector<IntVector> cols;
    while (cols.size() < n) {
      IntVector col;
      for (std::size_t j = 0; j < d; ++j) col.push_back(static_cast<long long>(rng() % 5));
      if (!IsZero(col)) cols.push_back(std::move(col));
    }
    const GeneratorMatrix a(d, cols);
    if (LatticeKernel(a).empty()) continue;
    ++instances;
    std::string name = "A=";
    for (const IntVector& col : cols) name += Str(col);
    const SemigroupPresentation lawrence(Lawrence(a).generators);
    c.Expect(BettiElements(lawrence).uniquely_presented, name + " Lawrence ideal");
    for (int k = 0; k < 3; ++k) {
      IntVector w;
      for (std::size_t i = 0; i < 2 * n; ++i) w.push_back(static_cast<long long>(rng() % 9));
      const DegenerationContext ctx(lawrence, w);
      const BettiReport r = BettiElements(ctx.degenerated());
      c.Expect(r.uniquely_presented, name + " w=" + Str(w));
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 10: oracle sweeps.

void SweepInstance(const std::string& name, const SemigroupPresentation& s, Checker& c) {
  if (!FiniteFibers(s)) return;
  const std::size_t n = s.count();
  const BettiReport reference = BettiElements(s);
  const std::vector<Binomial> gens = ToricIdeal(s);
  std::vector<std::size_t> reversed(n);
  for (std::size_t i = 0; i < n; ++i) reversed[i] = n - 1 - i;
  for (const TermOrder& order : {TermOrder::Lex(n), TermOrder::DegRevLex(n),
                                 TermOrder(ZeroVector(n), TieBreak::kLex, reversed)}) {
    const BettiReport r =
        BettiElementsFromGenerators(s, Buchberger(gens, order).elements);
    c.Expect(r.beta1_counts == reference.beta1_counts,
             name + " Betti degrees under " + std::string(TieBreakName(order.tiebreak())));
  }
  const SaturationReport zonotope = IsSaturated(s);
  const SaturationReport ball = SaturationByBall(s);
  c.Expect(zonotope.saturated == ball.saturated, name + " saturation oracle");

  Integer top = 0;
  for (const IntVector& b : reference.betti) top = std::max(top, s.Height(b));
  std::vector<IntVector> degrees = ElementsUpTo(s, top);
  if (degrees.size() > kMaxFiberDegrees) degrees.resize(kMaxFiberDegrees);
  for (const IntVector& b : reference.betti) degrees.push_back(b);
  for (const IntVector& b : degrees) {
    Fiber fiber;
    try {
      fiber = ComputeFiber(s, b, kMaxFiberPoints);
    } catch (const LimitExceeded&) {
      continue;
    }
    const std::size_t expected =
        reference.IsBetti(b) ? reference.beta1_counts.at(b) : std::size_t{0};
    c.Expect(FiberGraphComponents(fiber) - 1 == expected,
             name + " fiber graph at " + Str(b));
  }
}

void CriterionOracles(const std::vector<CorpusEntry>& corpus, Checker& c) {
  for (const CorpusEntry& e : corpus) {
    const SemigroupPresentation s(e.file.generators);
    SweepInstance(e.stem, s, c);
    if (e.file.weights.has_value()) {
      SweepInstance(e.stem + "_w", DegenerationContext(s, *e.file.weights).degenerated(), c);
    }
  }
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(Checker&)> run;
};

}  // namespace

RandomInstance DrawRandomInstance(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 3;
  const std::size_t d = 1 + rng() % 3;
  std::vector<IntVector> cols;
  while (cols.size() < n) {
    IntVector col;
    for (std::size_t j = 0; j < d; ++j) col.push_back(static_cast<long long>(rng() % 7));
    if (!IsZero(col)) cols.push_back(std::move(col));
  }
  RandomInstance r;
  r.a = GeneratorMatrix(d, std::move(cols));
  for (std::size_t i = 0; i < n; ++i) r.w.push_back(static_cast<long long>(rng() % 9));
  return r;
}

std::vector<CorpusEntry> LoadCorpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw UsageError("corpus directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> paths;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    const std::string name = item.path().filename().string();
    if (item.is_regular_file() && item.path().extension() == ".json" &&
        name.find(".expected.json") == std::string::npos) {
      paths.push_back(item.path());
    }
  }
  if (paths.empty()) throw UsageError("corpus directory " + dir.string() + " is empty");
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusEntry> corpus;
  for (const std::filesystem::path& p : paths) {
    CorpusEntry e;
    e.path = p;
    e.stem = p.stem().string();
    e.file = LoadProblemFile(p);
    const std::filesystem::path sidecar = dir / (e.stem + ".expected.json");
    if (std::filesystem::exists(sidecar)) e.expected = ParseJson(ReadFile(sidecar));
    corpus.push_back(std::move(e));
  }
  return corpus;
}

std::vector<CriterionResult> RunAcceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<CorpusEntry> corpus = LoadCorpus(options.corpus_dir);
  const std::uint64_t seed = options.seed;
  const std::vector<Criterion> criteria = {
      {"0", "Corpus expectations and round trip",
       [&](Checker& c) { CriterionCorpus(corpus, c); }},
      {"1", "(I_A)_t = I_{A_w} on examples, families and random instances",
       [&](Checker& c) { CriterionTheoremMain(corpus, seed + 1, c); }},
      {"2", "Example 1-1 Betti elements", [&](Checker& c) { CriterionExample11(corpus, c); }},
      {"3", "Scroll example basis and Betti elements",
       [&](Checker& c) { CriterionScroll(corpus, c); }},
      {"4", "Saturation dichotomy for A(m)_w", [&](Checker& c) { CriterionSaturation(c); }},
      {"5", "interval_even Groebner basis shapes and unique presentation",
       [&](Checker& c) { CriterionGrob1(c); }},
      {"6", "Betti elements lift to S_w; |B_z| <= |A_z|",
       [&](Checker& c) { CriterionInclusion(corpus, seed + 1, c); }},
      {"7", "Approximation certificates for S_w",
       [&](Checker& c) { CriterionApprox(seed + 7, c); }},
      {"8", "Möbius closed formulas against brute force",
       [&](Checker& c) { CriterionMoebius(c); }},
      {"9", "Lawrence degenerations are uniquely presented",
       [&](Checker& c) { CriterionLawrence(seed + 9, c); }},
      {"10", "Oracle sweeps: term orders, saturation ball, fiber graphs",
       [&](Checker& c) { CriterionOracles(corpus, c); }},
  };
  std::vector<CriterionResult> results;
  for (const Criterion& criterion : criteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), criterion.id) ==
            options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = criterion.id;
    r.title = criterion.title;
    const auto start = Clock::now();
    Checker checker;
    try {
      criterion.run(checker);
      r.passed = checker.ok();
      r.detail = checker.Detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = Since(start);
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string FormatResult(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof(time), "%.2f s", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + r.id +
         std::string(r.id.size() < 2 ? 2 - r.id.size() : 0, ' ') + "  " + r.title + "  (" +
         time + ")  " + r.detail;
}

int AcceptanceExitCode(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}

}  // namespace toricdegen::tools
