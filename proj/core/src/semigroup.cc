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
#include "toricdegen/semigroup.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

#include "toricdegen/errors.h"
#include "toricdegen/groebner.h"
#include "toricdegen/lattice.h"

namespace toricdegen {
namespace {

// Depth-first search for a representation, bounded by the functional.
class MembershipSearch {
 public:
  explicit MembershipSearch(const SemigroupPresentation& s) : s_(s) {
    if (!s.pointed()) {
      throw NotPointed("membership needs a pointed semigroup so that the "
                       "search depth is bounded");
    }
    for (std::size_t i = 0; i < s.count(); ++i) {
      if (IsZero(s.generators().column(i))) continue;
      active_.push_back(i);
      heights_.push_back(s.Height(s.generators().column(i)));
    }
  }

  std::optional<IntVector> Find(const IntVector& z) {
    if (z.size() != s_.ambient_dim()) {
      throw DimensionMismatch("point " + ToString(z) + " is not in Z^" +
                              std::to_string(s_.ambient_dim()));
    }
    IntVector u = ZeroVector(s_.count());
    if (Search(z, s_.Height(z), u)) return u;
    return std::nullopt;
  }

 private:
  bool Search(const IntVector& r, const Integer& height, IntVector& u) {
    if (IsZero(r)) return true;
    if (height <= 0 || dead_.count(r) > 0) return false;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      if (heights_[k] > height) continue;
      const std::size_t i = active_[k];
      u[i] += 1;
      if (Search(Subtract(r, s_.generators().column(i)), height - heights_[k], u)) {
        return true;
      }
      u[i] -= 1;
    }
    dead_.insert(r);
    return false;
  }

  const SemigroupPresentation& s_;
  std::vector<std::size_t> active_;
  std::vector<Integer> heights_;
  std::unordered_set<IntVector, IntVectorHash> dead_;
};

class FiberEnumeration {
 public:
  FiberEnumeration(const SemigroupPresentation& s, std::size_t max_points)
      : s_(s), max_points_(max_points), dead_(s.count()) {
    s.RequireFiniteFibers();
  }

  std::vector<IntVector> Run(const IntVector& b) {
    IntVector u = ZeroVector(s_.count());
    Rec(0, b, u);
    std::sort(points_.begin(), points_.end());
    return std::move(points_);
  }

 private:
  bool Rec(std::size_t i, const IntVector& r, IntVector& u) {
    if (i == s_.count()) {
      if (!IsZero(r)) return false;
      points_.push_back(u);
      if (points_.size() > max_points_) {
        throw LimitExceeded("fiber has more than " + std::to_string(max_points_) +
                            " points");
      }
      return true;
    }
    if (dead_[i].count(r) > 0) return false;
    const IntVector& col = s_.generators().column(i);
    const Integer h = s_.Height(col);
    bool any = false;
    IntVector residual = r;
    for (Integer k = 0; s_.Height(residual) >= 0; ++k) {
      u[i] = k;
      any = Rec(i + 1, residual, u) || any;
      residual = Subtract(residual, col);
    }
    u[i] = 0;
    if (!any) dead_[i].insert(r);
    return any;
  }

  const SemigroupPresentation& s_;
  std::size_t max_points_;
  std::vector<std::unordered_set<IntVector, IntVectorHash>> dead_;
  std::vector<IntVector> points_;
};

// Elements of S grouped by functional value, grown one level at a time.
class LevelEnumeration {
 public:
  explicit LevelEnumeration(const SemigroupPresentation& s) : s_(s) {
    if (!s.pointed()) throw NotPointed("element enumeration needs a pointed semigroup");
    levels_.push_back({ZeroVector(s.ambient_dim())});
  }

  const std::set<IntVector>& Next() {
    const std::size_t h = levels_.size();
    std::set<IntVector> level;
    for (const IntVector& col : s_.generators().columns()) {
      if (IsZero(col)) continue;
      const Integer gh = s_.Height(col);
      if (gh > h) continue;
      for (const IntVector& e : levels_[h - static_cast<std::size_t>(gh)]) {
        level.insert(Add(e, col));
      }
    }
    levels_.push_back(std::move(level));
    return levels_.back();
  }
  const std::set<IntVector>& Level(std::size_t h) const { return levels_[h]; }

 private:
  const SemigroupPresentation& s_;
  std::vector<std::set<IntVector>> levels_;
};

IntVector Append(IntVector v, const Integer& last) {
  v.push_back(last);
  return v;
}

}  // namespace

std::optional<IntVector> Member(const SemigroupPresentation& s, const IntVector& z) {
  return MembershipSearch(s).Find(z);
}

Fiber ComputeFiber(const SemigroupPresentation& s, const IntVector& b,
                   std::size_t max_points) {
  if (b.size() != s.ambient_dim()) {
    throw DimensionMismatch("degree " + ToString(b) + " is not in Z^" +
                            std::to_string(s.ambient_dim()));
  }
  Fiber f;
  f.degree = b;
  f.points = FiberEnumeration(s, max_points).Run(b);
  return f;
}

std::vector<IntVector> ElementsUpTo(const SemigroupPresentation& s,
                                    const Integer& bound) {
  std::vector<IntVector> out;
  if (bound < 0) return out;
  LevelEnumeration levels(s);
  const std::size_t top = static_cast<std::size_t>(bound);
  for (std::size_t h = 0; h <= top; ++h) {
    const std::set<IntVector>& level = h == 0 ? levels.Level(0) : levels.Next();
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

BettiReport BettiElementsFromGenerators(const SemigroupPresentation& s,
                                        const std::vector<Binomial>& gens) {
  s.RequireFiniteFibers();
  BettiReport report;
  for (const GradedGenerators& g : MinimalGenerators(gens, s.generators())) {
    report.betti.push_back(g.degree);
    report.beta1_counts[g.degree] = g.count;
    report.generators_used.insert(report.generators_used.end(), g.generators.begin(),
                                  g.generators.end());
  }
  MembershipSearch search(s);
  for (const IntVector& b : report.betti) {
    bool minimal = true;
    for (const IntVector& other : report.betti) {
      if (other != b && search.Find(Subtract(b, other)).has_value()) {
        minimal = false;
        break;
      }
    }
    if (minimal) report.betti_minimal.push_back(b);
  }
  report.uniquely_presented = report.betti_minimal.size() == report.betti.size();
  for (const auto& [degree, count] : report.beta1_counts) {
    if (count != 1) report.uniquely_presented = false;
  }
  return report;
}

BettiReport BettiElements(const SemigroupPresentation& s) {
  s.RequireFiniteFibers();
  return BettiElementsFromGenerators(s, ToricIdeal(s));
}

InclusionReport CheckTheoremInclusion(const DegenerationContext& ctx) {
  InclusionReport report;
  report.base = BettiElements(ctx.base());
  report.degenerated = BettiElements(ctx.degenerated());
  const std::size_t d = ctx.base().ambient_dim();
  for (const IntVector& b : report.base.betti) report.lambdas[b];
  for (const IntVector& bw : report.degenerated.betti) {
    IntVector b(bw.begin(), bw.begin() + static_cast<std::ptrdiff_t>(d));
    auto it = report.lambdas.find(b);
    if (it == report.lambdas.end()) {
      report.extra.push_back(bw);
    } else {
      it->second.push_back(bw[d]);
    }
  }
  for (auto& [b, lambdas] : report.lambdas) {
    if (lambdas.empty()) {
      throw TheoryViolation("Betti element " + ToString(b) +
                            " of S has no lift to a Betti element of S_w");
    }
    std::sort(lambdas.begin(), lambdas.end());
  }
  return report;
}

SaturationReport IsSaturated(const SemigroupPresentation& s) {
  MembershipSearch search(s);
  SaturationReport report;
  for (const IntVector& c : ZonotopePoints(s.generators())) {
    ++report.checked_points;
    if (!search.Find(c).has_value()) {
      report.saturated = false;
      report.witness = c;
      break;
    }
  }
  return report;
}

SaturationReport SaturationByBall(const SemigroupPresentation& s,
                                  std::optional<Integer> bound) {
  MembershipSearch search(s);
  const GeneratorMatrix& a = s.generators();
  const std::size_t d = s.ambient_dim();
  Integer b = 0;
  if (bound.has_value()) {
    b = *bound;
  } else {
    for (const IntVector& col : a.columns()) b += s.Height(col);
  }
  // The ball is the simplex with vertices 0 and b·a_i / height(a_i).
  IntVector lo = ZeroVector(d), hi = ZeroVector(d);
  for (const IntVector& col : a.columns()) {
    if (IsZero(col)) continue;
    const Integer h = s.Height(col);
    for (std::size_t j = 0; j < d; ++j) {
      const Integer num = b * col[j];
      Integer q = num / h;
      if (q * h != num && num < 0) q -= 1;
      lo[j] = std::min(lo[j], q);
      Integer q_up = num / h;
      if (q_up * h != num && num > 0) q_up += 1;
      hi[j] = std::max(hi[j], q_up);
    }
  }
  SaturationReport report;
  if (d == 0) return report;
  IntVector z = lo;
  while (true) {
    const Integer h = s.Height(z);
    if (h >= 0 && h <= b && !search.Find(z).has_value() && ConeMember(z, a).member) {
      report.saturated = false;
      report.witness = z;
      ++report.checked_points;
      return report;
    }
    if (h >= 0 && h <= b) ++report.checked_points;
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (z[j] < hi[j]) {
        z[j] += 1;
        break;
      }
      z[j] = lo[j];
      if (j == 0) return report;
    }
  }
}

IntVector ApproximationElement(const SemigroupPresentation& s,
                               const Integer& max_height) {
  MembershipSearch search(s);
  const std::vector<IntVector> zonotope = ZonotopePoints(s.generators());
  LevelEnumeration levels(s);
  for (std::size_t h = 0; h <= max_height; ++h) {
    const std::set<IntVector>& level = h == 0 ? levels.Level(0) : levels.Next();
    for (const IntVector& a : level) {
      bool ok = true;
      for (const IntVector& c : zonotope) {
        if (!search.Find(Add(a, c)).has_value()) {
          ok = false;
          break;
        }
      }
      if (ok) return a;
    }
  }
  throw LimitExceeded("no approximation element with functional value <= " +
                      max_height.str());
}

ApproximationCertificate ApproxDegeneration(const DegenerationContext& ctx,
                                            const IntVector& a) {
  const SemigroupPresentation& base = ctx.base();
  const SemigroupPresentation& sw = ctx.degenerated();
  const IntVector& w = ctx.weight();
  const std::size_t d = base.ambient_dim();
  MembershipSearch in_base(base);
  MembershipSearch in_sw(sw);

  ApproximationCertificate cert;
  cert.a = a;
  std::optional<IntVector> l = in_base.Find(a);
  if (!l.has_value()) throw InvalidParams(ToString(a) + " is not in S");
  cert.a_representation = *l;
  for (const IntVector& c : ZonotopePoints(base.generators())) {
    if (!in_base.Find(Add(a, c)).has_value()) {
      throw InvalidParams(ToString(a) + " does not approximate S: " +
                          ToString(Add(a, c)) + " is not in S");
    }
  }
  const Integer lw = Dot(*l, w);
  const IntVector a0 = Append(a, 0);
  const std::vector<IntVector> zonotope_w = ZonotopePoints(sw.generators());
  cert.delta = lw;
  for (const IntVector& p : zonotope_w) {
    ZonotopeCase zc;
    zc.point = p;
    zc.delta = lw;
    if (in_sw.Find(p).has_value()) {
      zc.tag = "1";
    } else if (in_sw.Find(Add(a0, p)).has_value()) {
      zc.tag = "2.1";
    } else {
      zc.tag = "2.2";
      const IntVector c(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(d));
      std::optional<IntVector> beta = in_base.Find(Add(a, c));
      if (!beta.has_value()) {
        throw TheoryViolation(ToString(Add(a, c)) + " should be in S");
      }
      zc.delta = std::max(Dot(*beta, w) - p[d], lw);
    }
    cert.delta = std::max(cert.delta, zc.delta);
    cert.per_point.push_back(std::move(zc));
  }
  const IntVector ad = Append(a, cert.delta);
  if (!in_sw.Find(ad).has_value()) {
    throw CertificationFailure(ToString(ad) + " is not in S_w");
  }
  for (const IntVector& p : zonotope_w) {
    if (!in_sw.Find(Add(ad, p)).has_value()) {
      throw CertificationFailure(ToString(ad) + " + " + ToString(p) +
                                 " is not in S_w");
    }
  }
  return cert;
}

IntVector RandomSaturationElement(const GeneratorMatrix& a,
                                  const std::vector<IntVector>& zonotope,
                                  std::mt19937_64& rng, int max_multiple) {
  if (zonotope.empty()) throw InvalidParams("empty zonotope point list");
  IntVector v = zonotope[rng() % zonotope.size()];
  for (const IntVector& col : a.columns()) {
    const auto k = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_multiple + 1));
    v = Add(v, Scale(k, col));
  }
  return v;
}

std::optional<IntVector> SampleCertificate(const DegenerationContext& ctx,
                                           const ApproximationCertificate& cert,
                                           std::size_t samples, std::uint64_t seed) {
  MembershipSearch in_sw(ctx.degenerated());
  const std::vector<IntVector> zonotope = ZonotopePoints(ctx.a_w());
  const IntVector ad = Append(cert.a, cert.delta);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    IntVector v = RandomSaturationElement(ctx.a_w(), zonotope, rng);
    if (!in_sw.Find(Add(ad, v)).has_value()) return v;
  }
  return std::nullopt;
}

std::size_t FiberGraphComponents(const Fiber& fiber) {
  const std::size_t m = fiber.points.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (m == 0) return 0;
  const std::size_t n = fiber.points.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> first;
    for (std::size_t p = 0; p < m; ++p) {
      if (fiber.points[p][i] == 0) continue;
      if (first.has_value()) parent[find(p)] = find(*first);
      else first = p;
    }
  }
  std::size_t components = 0;
  for (std::size_t p = 0; p < m; ++p) {
    if (find(p) == p) ++components;
  }
  return components;
}

}  // namespace toricdegen
