// Copyright 2026 The quotlift Authors
//
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

#include "quotlift/tower.h"

#include <algorithm>
#include <map>
#include <string>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

// Above this many group elements in a stage, only the fixed sample is
// analysed; below it the extremes of the previous family join the sample and
// condition (iv) is checked for every g.
constexpr int64_t kExhaustiveLimit = 4096;
constexpr int64_t kExtremesLimit = 100000;

using MapCache = std::map<Elem, IntervalMap>;

std::string Tag(int n) { return "stage-" + std::to_string(n) + "/"; }

PowerValue Val(const Rational& r) { return PowerValue::Of(r); }
PowerValue Val(int64_t v) { return PowerValue::Of(Rational(v)); }

int64_t StageSize(const TowerStage& s) {
  int64_t total = 0;
  for (const auto& t : s.tiles) total += static_cast<int64_t>(t.shape.size());
  return total;
}

int64_t SquareSize(const TowerStage& s) {
  int64_t total = 0;
  for (const auto& t : s.tiles) {
    int64_t m = static_cast<int64_t>(t.shape.size());
    total += m * m;
  }
  return total;
}

bool InSomeShape(const TowerStage& s, const std::vector<Elem>& xs) {
  for (const auto& t : s.tiles) {
    bool all = true;
    for (const Elem& x : xs) all = all && ContainsElem(t.shape, x);
    if (all) return true;
  }
  return false;
}

// D_{B,c} = {h ∈ B : hc not covered by an earlier translate}, in the order
// shapes × centers.
std::vector<std::vector<ElemSet>> GreedyWitnesses(const MarkedGroup& g, const QuasiTiling& t) {
  std::vector<Elem> covered;
  std::vector<std::vector<ElemSet>> out(t.shapes.size());
  for (size_t i = 0; i < t.shapes.size(); ++i) {
    for (const Elem& c : t.centers[i]) {
      ElemSet d;
      std::vector<Elem> fresh;
      ElemSet sorted_cov = MakeSet(covered);
      for (const Elem& h : t.shapes[i]) {
        Elem hc = g.Mul(h, c);
        if (!std::binary_search(sorted_cov.begin(), sorted_cov.end(), hc)) {
          d.push_back(h);
          fresh.push_back(hc);
        }
      }
      covered.insert(covered.end(), fresh.begin(), fresh.end());
      out[i].push_back(std::move(d));
    }
  }
  return out;
}

Rational EpsAt(const std::vector<Rational>& eps, int n) {
  if (eps.empty()) return 0;
  if (n < static_cast<int>(eps.size())) return eps[n];
  return eps.back();
}

AgreementStat Agreement(const Tower& t, int prev, const Elem& x, const IntervalMap& before,
                        const IntervalMap& after) {
  AgreementStat st;
  st.g = x;
  st.agree = AgreementMeasure(before, after);
  st.common = before.Domain().Intersect(after.Domain()).Measure();
  st.disagree = st.common - st.agree;
  st.hypothesis = prev >= 1 && InSomeShape(t.stages[prev - 1], {x});
  Rational e = EpsAt(t.eps, prev);
  st.bound = (1 - e) * (1 - 3 * e);
  st.pass = !st.hypothesis || st.agree >= st.bound;
  return st;
}

ActionStat Action(const MarkedGroup& g, const Tower& t, int stage, const Elem& x, const Elem& y,
                  const IntervalMap& mx, const IntervalMap& my, const IntervalMap& mxy) {
  ActionStat st;
  st.g = x;
  st.h = y;
  IntervalMap composed = Compose(mx, my);
  st.agree = AgreementMeasure(mxy, composed);
  st.common = mxy.Domain().Intersect(composed.Domain()).Measure();
  st.defect = st.common - st.agree;
  st.hypothesis = stage >= 1 && InSomeShape(t.stages[stage - 1], {x, y, g.Mul(x, y)});
  st.bound = 1 - 2 * EpsAt(t.eps, stage);
  st.pass = !st.hypothesis || st.agree >= st.bound;
  return st;
}

nlohmann::json StatJson(const MarkedGroup& g, const AgreementStat& s) {
  return {{"g", g.ElemToJson(s.g)},          {"agree", ToJson(s.agree)},
          {"common", ToJson(s.common)},      {"disagree", ToJson(s.disagree)},
          {"hypothesis", s.hypothesis},      {"bound", ToJson(s.bound)},
          {"pass", s.pass}};
}

nlohmann::json StatJson(const MarkedGroup& g, const ActionStat& s) {
  return {{"g", g.ElemToJson(s.g)},     {"h", g.ElemToJson(s.h)},
          {"agree", ToJson(s.agree)},   {"common", ToJson(s.common)},
          {"defect", ToJson(s.defect)}, {"hypothesis", s.hypothesis},
          {"bound", ToJson(s.bound)},   {"pass", s.pass}};
}

// Elements whose global lifts are materialised at stage `s`.
std::vector<Elem> ReportElements(const MarkedGroup& g, const Tower& t, int n) {
  const TowerStage& s = t.stages[n];
  std::vector<Elem> out;
  for (const Elem& x : SampleElements(g))
    if (s.Represents(x)) out.push_back(x);
  if (n >= 1 && StageSize(s) <= kExtremesLimit) {
    for (const auto& tile : t.stages[n - 1].tiles) {
      out.push_back(tile.shape.front());
      out.push_back(tile.shape.back());
    }
  }
  if (SquareSize(s) <= kExhaustiveLimit) {
    for (const auto& tile : s.tiles) out.insert(out.end(), tile.shape.begin(), tile.shape.end());
  }
  return MakeSet(std::move(out));
}

// Condition (iv) through the glued global lift of x.
int64_t ActionMismatches(const MarkedGroup& g, const TowerStage& s, const Elem& x,
                         const IntervalMap& mx) {
  int64_t bad = 0;
  for (const auto& tile : s.tiles) {
    SetIndex idx(tile.shape);
    for (size_t k = 0; k < tile.shape.size(); ++k) {
      int64_t pos = idx.Find(g.Mul(x, tile.shape[k]));
      if (pos < 0) continue;
      if (!(Compose(mx, tile.lifts[k]) == tile.lifts[pos])) ++bad;
    }
  }
  return bad;
}

}  // namespace

Rational BorelCantelliTerm(const Rational& eps) { return 1 - (1 - eps) * (1 - 3 * eps); }

std::vector<Elem> SampleElements(const MarkedGroup& g) {
  if (g.kind() == GroupKind::kZ) return {{0, 0}, {1, 0}, {-1, 0}, {2, 0}};
  if (g.kind() == GroupKind::kZ2) return {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0}};
  std::vector<Elem> out;
  for (int64_t i = 0;; ++i) {
    auto e = g.Enumerate(i);
    if (!e || i >= 8) break;
    out.push_back(*e);
  }
  return out;
}

bool TowerStage::Represents(const Elem& x) const {
  for (const auto& t : tiles)
    if (ContainsElem(t.shape, x)) return true;
  return false;
}

IntervalMap TowerStage::GlobalLift(const MarkedGroup& g, const Elem& x) const {
  std::vector<Piece> all;
  for (const auto& tile : tiles) {
    SetIndex idx(tile.shape);
    for (size_t k = 0; k < tile.shape.size(); ++k) {
      int64_t pos = idx.Find(g.Mul(x, tile.shape[k]));
      if (pos < 0) continue;
      IntervalMap part = Compose(tile.lifts[pos], tile.lifts[k].Inverse());
      all.insert(all.end(), part.pieces().begin(), part.pieces().end());
    }
  }
  try {
    return IntervalMap::FromPieces(std::move(all));
  } catch (const InputError& e) {
    throw ConstraintViolation("disjoint-union",
                              "φ^" + std::to_string(level) + "_" + g.Format(x) + " does not glue: " + e.what());
  }
}

nlohmann::json TowerStage::ToJson(const MarkedGroup& g, bool full) const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : tiles) {
    nlohmann::json j = {{"set", ElemSetToJson(g, t.shape)},
                        {"p", quotlift::ToJson(t.p)},
                        {"X", t.base.ToJson()},
                        {"measure", quotlift::ToJson(t.base.Measure())},
                        {"base_shape", t.base_shape}};
    if (full) {
      nlohmann::json lifts = nlohmann::json::array();
      for (size_t k = 0; k < t.shape.size(); ++k)
        lifts.push_back({{"g", g.ElemToJson(t.shape[k])}, {"pieces", t.lifts[k].ToJson()}});
      j["lifts"] = std::move(lifts);
    }
    ts.push_back(std::move(j));
  }
  return {{"level", level}, {"tiles", ts}, {"all_pass", ledger.all_pass()}};
}

nlohmann::json StageReport::ToJson(const MarkedGroup& g) const {
  nlohmann::json ag = nlohmann::json::array(), ac = nlohmann::json::array();
  for (const auto& s : agreement) ag.push_back(StatJson(g, s));
  for (const auto& s : action) ac.push_back(StatJson(g, s));
  return {{"prev", prev},         {"cur", cur},
          {"agreement", ag},      {"action", ac},
          {"skipped", skipped},   {"tail_sum", quotlift::ToJson(tail_sum)}};
}

nlohmann::json Tower::ToJson(const MarkedGroup& g, bool full) const {
  nlohmann::json e = nlohmann::json::array(), st = nlohmann::json::array(),
                 rep = nlohmann::json::array();
  for (const auto& x : eps) e.push_back(quotlift::ToJson(x));
  for (const auto& s : stages) st.push_back(s.ToJson(g, full));
  for (const auto& r : reports) rep.push_back(r.ToJson(g));
  nlohmann::json bc = {{"prefix_sum", quotlift::ToJson(tail_prefix)}};
  if (tail_rest) {
    bc["rest"] = quotlift::ToJson(*tail_rest);
    bc["total"] = quotlift::ToJson(tail_prefix + *tail_rest);
  }
  return {{"eps", e},          {"stages", st},       {"reports", rep},
          {"borel_cantelli", bc}, {"ledger", ledger.ToJson()}, {"all_pass", ledger.all_pass()}};
}

TowerStage ExtendStage(const MarkedGroup& g, const TowerStage& prev, const HierarchyLevel& next) {
  TowerStage s;
  s.level = prev.level + 1;
  const std::string tag = Tag(s.level);
  const size_t nb = prev.tiles.size();
  if (next.tilings.size() != next.family.size() || next.p.size() != next.family.size()) {
    throw PreconditionError("every A ∈ 𝒜_" + std::to_string(s.level) +
                            " needs a weight and a quasi-tiling");
  }
  std::vector<std::vector<std::vector<ElemSet>>> witnesses;
  for (const auto& t : next.tilings) {
    if (t.shapes.size() != nb) throw PreconditionError("tiling shapes must be 𝒜_n in order");
    for (size_t i = 0; i < nb; ++i) {
      if (t.shapes[i] != prev.tiles[i].shape) {
        throw PreconditionError("tiling shape " + std::to_string(i) + " is not the stage's B_" +
                                std::to_string(i));
      }
    }
    witnesses.push_back(t.witnesses.empty() ? GreedyWitnesses(g, t) : t.witnesses);
  }

  // Budgets from the proof, checked before any choice is made.
  std::vector<Rational> demand(nb, 0);
  std::vector<int> base_of(next.family.size(), -1);
  for (size_t a = 0; a < next.family.size(); ++a) {
    const auto& t = next.tilings[a];
    const Rational pa = next.p[a];
    const Rational mu = pa / static_cast<int64_t>(next.family[a].size());
    const std::string at = tag + "A" + std::to_string(a);
    int bases = 0;
    for (size_t i = 0; i < nb; ++i) {
      Rational cnt(static_cast<int64_t>(t.centers[i].size()));
      demand[i] += cnt * mu;
      s.ledger.Require(at + "-B" + std::to_string(i) + "/budget", "|C^A_B| μ_E(X_A) ≤ p_A μ_E(X_B)",
                       Val(cnt * mu), Relation::kLe, Val(pa * prev.tiles[i].base.Measure()));
      if (std::find(t.centers[i].begin(), t.centers[i].end(), g.Identity()) != t.centers[i].end()) {
        ++bases;
        base_of[a] = static_cast<int>(i);
      }
    }
    s.ledger.Require(at + "/base-unique", "exactly one B ∈ 𝒜_n with 1 ∈ C^A_B", Val(bases),
                     Relation::kEq, Val(1));
    const TowerTile& b = prev.tiles[base_of[a]];
    s.ledger.Require(at + "/base-ratio", "|C^A_B|/|A| ≤ p_B/|B|",
                     Val(Rational(static_cast<int64_t>(t.centers[base_of[a]].size())) /
                         static_cast<int64_t>(next.family[a].size())),
                     Relation::kLe, Val(b.p / static_cast<int64_t>(b.shape.size())));
  }
  for (size_t i = 0; i < nb; ++i) {
    s.ledger.Require(tag + "B" + std::to_string(i) + "/capacity", "Σ_A |C^A_B| μ_E(X_A) ≤ μ_E(X_B)",
                     Val(demand[i]), Relation::kLe, Val(prev.tiles[i].base.Measure()));
  }

  std::vector<MeasureAllocator> free;
  std::vector<SetIndex> prev_index;
  for (const auto& b : prev.tiles) {
    free.emplace_back(b.base);
    prev_index.emplace_back(b.shape);
  }
  std::vector<std::vector<char>> assigned;
  std::vector<Interval> images;
  for (size_t a = 0; a < next.family.size(); ++a) {
    const ElemSet& shape = next.family[a];
    const auto& t = next.tilings[a];
    const Rational mu = next.p[a] / static_cast<int64_t>(shape.size());
    SetIndex idx(shape);
    TowerTile tile;
    tile.shape = shape;
    tile.p = next.p[a];
    tile.base_shape = base_of[a];
    tile.base = free[base_of[a]].Take(mu);
    tile.lifts.resize(shape.size());
    std::vector<char> done(shape.size(), 0);
    for (size_t i = 0; i < nb; ++i) {
      const TowerTile& b = prev.tiles[i];
      for (size_t j = 0; j < t.centers[i].size(); ++j) {
        const Elem& c = t.centers[i][j];
        // ψ_c: X_A → X_B; the base copy is the identity.
        IntervalMap psi;
        if (static_cast<int>(i) == base_of[a] && c == g.Identity()) {
          psi = IntervalMap::Identity(tile.base);
        } else {
          psi = *PartialBijectionBetween(tile.base, free[i].Take(mu));
        }
        for (const Elem& h : witnesses[a][i][j]) {
          int64_t hb = prev_index[i].Find(h);
          int64_t pos = idx.Find(g.Mul(h, c));
          if (hb < 0 || pos < 0) {
            throw ConstraintViolation("tiling", "witness " + g.Format(h) + " for center " +
                                                    g.Format(c) + " leaves B or A");
          }
          if (done[pos]) {
            throw ConstraintViolation("witness-disjointness",
                                      g.Format(g.Mul(h, c)) + " is covered twice by the witnesses");
          }
          done[pos] = 1;
          tile.lifts[pos] = Compose(b.lifts[hb], psi);
          for (const auto& p : tile.lifts[pos].pieces()) images.push_back({p.lo + p.shift, p.hi + p.shift});
        }
      }
    }
    assigned.push_back(std::move(done));
    s.tiles.push_back(std::move(tile));
  }

  // Every g ∈ A outside the translates gets a fresh piece of the complement.
  IntervalSet used = IntervalSet::FromIntervals(std::move(images));
  Rational need = 0;
  for (size_t a = 0; a < s.tiles.size(); ++a) {
    int64_t open = std::count(assigned[a].begin(), assigned[a].end(), 0);
    need += s.tiles[a].base.Measure() * open;
  }
  s.ledger.Require(tag + "completion", "Σ_A Σ_{g∈A} μ_E(X_A) = 1", Val(used.Measure() + need),
                   Relation::kEq, Val(1));
  MeasureAllocator rest(IntervalSet::Unit().Difference(used));
  for (size_t a = 0; a < s.tiles.size(); ++a) {
    TowerTile& tile = s.tiles[a];
    const Rational mu = tile.base.Measure();
    for (size_t k = 0; k < tile.shape.size(); ++k) {
      if (assigned[a][k]) continue;
      tile.lifts[k] = *PartialBijectionBetween(tile.base, rest.Take(mu));
    }
  }
  s.ledger.Append(CheckStage(g, s));
  return s;
}

ConstraintLedger CheckStage(const MarkedGroup& g, const TowerStage& s) {
  ConstraintLedger led;
  const std::string tag = Tag(s.level);
  Rational total = 0;
  std::vector<Interval> images;
  for (size_t a = 0; a < s.tiles.size(); ++a) {
    const TowerTile& t = s.tiles[a];
    const std::string at = tag + "A" + std::to_string(a);
    const Rational size(static_cast<int64_t>(t.shape.size()));
    total += size * t.base.Measure();
    led.Check(at + "/measure", "|A| μ_E(X_A) = p_A", Val(size * t.base.Measure()), Relation::kEq,
              Val(t.p));
    auto id = std::lower_bound(t.shape.begin(), t.shape.end(), g.Identity());
    bool has_id = id != t.shape.end() && *id == g.Identity();
    bool ident = has_id && t.lifts[id - t.shape.begin()] == IntervalMap::Identity(t.base);
    led.Check(at + "/identity", "φ^n_1 = id_X on X_A", Val(Rational(ident)), Relation::kEq, Val(1));
    int64_t bad = 0;
    for (const auto& m : t.lifts) {
      if (!(m.Domain() == t.base)) ++bad;
      for (const auto& p : m.pieces()) images.push_back({p.lo + p.shift, p.hi + p.shift});
    }
    led.Check(at + "/domains", "dom φ^n_g = X_A for g ∈ A", Val(bad), Relation::kEq, Val(0));
  }
  led.Check(tag + "partition", "Σ_{A∈𝒜_n} |A| μ_E(X_A) = 1", Val(total), Relation::kEq, Val(1));
  std::sort(images.begin(), images.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  int64_t overlaps = 0;
  Rational covered = 0;
  for (size_t i = 0; i < images.size(); ++i) {
    if (i > 0 && images[i].lo < images[i - 1].hi) ++overlaps;
    covered += images[i].length();
  }
  led.Check(tag + "disjoint", "the family {φ^n_g(X_A) : A ∈ 𝒜_n, g ∈ A} is disjoint", Val(overlaps),
            Relation::kEq, Val(0));
  led.Check(tag + "tiles-unit", "the translates tile [0, 1)", Val(covered), Relation::kEq, Val(1));
  return led;
}

Tower BuildTower(const MarkedGroup& g, const TilingHierarchy& h, int stages) {
  if (stages < 0) throw InputError("stages must be non-negative");
  if (static_cast<int>(h.levels.size()) <= stages) {
    throw InputError("the hierarchy has levels 0.." + std::to_string(h.levels.size() - 1) +
                     ", need " + std::to_string(stages));
  }
  Tower t;
  t.eps = h.eps;
  t.tail_prefix = 0;
  bool defaults = !t.eps.empty();
  for (size_t n = 0; n < t.eps.size(); ++n) {
    Rational term = BorelCantelliTerm(t.eps[n]);
    t.ledger.Check("borel-cantelli/term-" + std::to_string(n), "0 ≤ 1 − (1−ε_n)(1−3ε_n) < 1",
                   Val(term), Relation::kLt, Val(1));
    t.tail_prefix += term;
    defaults = defaults && t.eps[n] == Pow(Rational(2), -static_cast<int64_t>(n) - 3);
  }
  if (defaults) {
    // Σ_{n ≥ N} (4·2^{−n−3} − 3·4^{−n−3}) = 2^{−N} − 4^{−N−2}.
    int64_t nn = static_cast<int64_t>(t.eps.size());
    t.tail_rest = Pow(Rational(2), -nn) - Pow(Rational(4), -nn - 2);
    t.ledger.Check("borel-cantelli/closed-form", "Σ_n (1 − (1−ε_n)(1−3ε_n)) < ∞",
                   Val(t.tail_prefix + *t.tail_rest), Relation::kEq, Val(Rational(15, 16)));
  }

  TowerStage zero;
  TowerTile base;
  base.shape = {g.Identity()};
  base.p = 1;
  base.base = IntervalSet::Unit();
  base.lifts = {IntervalMap::Identity(base.base)};
  zero.tiles.push_back(std::move(base));
  zero.ledger = CheckStage(g, zero);
  t.stages.push_back(std::move(zero));
  for (int n = 1; n <= stages; ++n) t.stages.push_back(ExtendStage(g, t.stages.back(), h.levels[n]));
  for (const auto& s : t.stages) t.ledger.Append(s.ledger);

  MapCache before;
  for (int n = 0; n <= stages; ++n) {
    const TowerStage& s = t.stages[n];
    const std::string tag = Tag(n);
    MapCache now;
    for (const Elem& x : ReportElements(g, t, n)) now.emplace(x, s.GlobalLift(g, x));
    const IntervalMap& id = now.at(g.Identity());
    t.ledger.Check(tag + "global-identity", "φ^n_1 = id_X",
                   Val(Rational(id.IsIdentity() && id.Domain() == IntervalSet::Unit())),
                   Relation::kEq, Val(1));
    for (const auto& [x, mx] : now) {
      t.ledger.Check(tag + "iv/" + g.Format(x), "φ^n_{gh} and φ^n_g φ^n_h agree on X_A",
                     Val(ActionMismatches(g, s, x, mx)), Relation::kEq, Val(0));
    }
    if (n == 0) {
      before = std::move(now);
      continue;
    }
    StageReport rep;
    rep.prev = n - 1;
    rep.cur = n;
    for (int m = 0; m < n && m < static_cast<int>(t.eps.size()); ++m) rep.tail_sum += BorelCantelliTerm(t.eps[m]);
    const std::string rt = "report-" + std::to_string(n - 1) + "-" + std::to_string(n) + "/";
    for (const auto& [x, mx] : now) {
      auto it = before.find(x);
      if (it == before.end()) continue;
      AgreementStat st = Agreement(t, n - 1, x, it->second, mx);
      if (st.hypothesis) {
        t.ledger.Check(rt + "agreement/" + g.Format(x),
                       "μ{φ^n_g = φ^{n+1}_g} ≥ (1−ε_n)(1−3ε_n)", Val(st.agree), Relation::kGe,
                       Val(st.bound));
      }
      rep.agreement.push_back(std::move(st));
    }
    std::vector<Elem> sample = SampleElements(g);
    for (const auto& [x, mx] : now) {
      for (const auto& [y, my] : now) {
        auto xy = now.find(g.Mul(x, y));
        if (xy == now.end()) continue;
        bool in_sample = std::find(sample.begin(), sample.end(), x) != sample.end() &&
                         std::find(sample.begin(), sample.end(), y) != sample.end();
        if (!in_sample && SquareSize(s) > kExhaustiveLimit && !(xy->first == g.Identity())) continue;
        ActionStat st = Action(g, t, n, x, y, mx, my, xy->second);
        if (st.hypothesis) {
          t.ledger.Check(rt + "action/" + g.Format(x) + "," + g.Format(y),
                         "μ{φ^n_{gh} = φ^n_g φ^n_h} ≥ 1 − 2ε_n", Val(st.agree), Relation::kGe,
                         Val(st.bound));
        }
        rep.action.push_back(std::move(st));
      }
    }
    t.reports.push_back(std::move(rep));
    MapCache keep;
    for (auto& [x, mx] : now) {
      if (std::find(sample.begin(), sample.end(), x) != sample.end() || SquareSize(s) <= kExhaustiveLimit)
        keep.emplace(x, std::move(mx));
    }
    before = std::move(keep);
  }
  return t;
}

StageReport StageReportFor(const MarkedGroup& g, const Tower& t, int prev, int cur, const Elem& x,
                           const Elem& y) {
  const int last = static_cast<int>(t.stages.size()) - 1;
  if (prev < 0 || cur < 0 || prev > last || cur > last) {
    throw InputError("stages must lie in 0.." + std::to_string(last));
  }
  StageReport rep;
  rep.prev = prev;
  rep.cur = cur;
  for (int m = 0; m <= prev && m < static_cast<int>(t.eps.size()); ++m) rep.tail_sum += BorelCantelliTerm(t.eps[m]);
  const TowerStage& a = t.stages[prev];
  const TowerStage& b = t.stages[cur];
  if (!a.Represents(x) || !b.Represents(x)) {
    rep.skipped.push_back(g.Format(x) + " is not represented at stages " + std::to_string(prev) +
                          " and " + std::to_string(cur));
  } else {
    rep.agreement.push_back(Agreement(t, prev, x, a.GlobalLift(g, x), b.GlobalLift(g, x)));
  }
  Elem xy = g.Mul(x, y);
  if (!b.Represents(x) || !b.Represents(y) || !b.Represents(xy)) {
    rep.skipped.push_back("(" + g.Format(x) + ", " + g.Format(y) + ") is not represented at stage " +
                          std::to_string(cur));
  } else {
    rep.action.push_back(Action(g, t, cur, x, y, b.GlobalLift(g, x), b.GlobalLift(g, y), b.GlobalLift(g, xy)));
  }
  return rep;
}

}  // namespace quotlift
