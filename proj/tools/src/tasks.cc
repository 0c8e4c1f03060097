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

#include "quotlift_cli/tasks.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "quotlift/automorphism.h"
#include "quotlift/choice_sequence.h"
#include "quotlift/equidecompose.h"
#include "quotlift/errors.h"
#include "quotlift/hierarchy.h"
#include "quotlift/instance_io.h"
#include "quotlift/lift.h"
#include "quotlift/link.h"
#include "quotlift/marked_group.h"
#include "quotlift/quasitile.h"
#include "quotlift/tower.h"
#include "quotlift_cli/generator.h"

namespace quotlift::cli {
namespace {

using nlohmann::json;

const json& Need(const json& inst, const char* key) {
  if (!inst.is_object() || !inst.contains(key)) {
    throw InputError(std::string("instance needs \"") + key + "\"");
  }
  return inst[key];
}

int SizeOf(const json& inst) {
  const json& n = Need(inst, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) throw InputError("\"n\" must be a positive integer");
  return n.get<int>();
}

FinEqrel Rel(const json& inst, const char* key) { return EqrelFromJson(SizeOf(inst), Need(inst, key)); }

std::vector<Perm> Gens(const json& inst) { return InstanceFromJson(inst).gens; }

json VerificationJson(const LinkVerification& v) {
  json j = {{"verdict", v.ok}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    j["counterexample"] = {{"f_class", c.f_class},
                           {"e_class", c.e_class},
                           {"l_class", c.l_class},
                           {"count", c.count}};
  }
  return j;
}

json TaskVerifyLink(const json& inst, const TaskParams&) {
  FinEqrel e = Rel(inst, "E"), f = Rel(inst, "F"), l = Rel(inst, "L");
  json out = VerificationJson(VerifyLink(e, f, l));
  out["ok"] = out["verdict"];
  return out;
}

json TaskLink(const json& inst, const TaskParams&) {
  FinEqrel e = Rel(inst, "E"), f = Rel(inst, "F");
  FinEqrel l = LinkFiniteIndex(e, f, Gens(inst));
  json out = VerificationJson(VerifyLink(e, f, l));
  out["link"] = EqrelToJson(l);
  out["ok"] = out["verdict"];
  return out;
}

json TaskExtendLink(const json& inst, const TaskParams&) {
  FinEqrel e = Rel(inst, "E"), f = Rel(inst, "F"), fp = Rel(inst, "F_prime");
  std::vector<Perm> gens = Gens(inst);
  FinEqrel l = inst.contains("L") ? Rel(inst, "L") : LinkFiniteIndex(e, f, RestrictWitness(e, gens, f));
  FinEqrel lp = ExtendLink(e, f, fp, l, gens);
  json out = VerificationJson(VerifyLink(e, fp, lp));
  out["link"] = EqrelToJson(l);
  out["extended"] = EqrelToJson(lp);
  out["contains_input"] = l.IsSubrelationOf(lp);
  out["ok"] = out["verdict"].get<bool>() && out["contains_input"].get<bool>();
  return out;
}

json TaskLift(const json& inst, const TaskParams&) {
  FinEqrel e = Rel(inst, "E");
  std::vector<Perm> gens = Gens(inst);
  if (gens.empty()) throw InputError("lift needs automorphism generators");
  std::vector<Perm> maps;
  for (const auto& t : gens) {
    if (!IsAutomorphism(e, t)) throw PreconditionError("a generator is not an automorphism of E");
    maps.push_back(InducedClassMap(e, t));
  }
  OuterAction outer = OuterAction::FromClassPermutations(e.num_classes(), maps);
  FinEqrel f = OuterJoin(e, outer);
  FinEqrel l = LinkFiniteIndex(e, f, gens);
  GroupAction act = LiftFromLink(e, outer, l);
  const FinGroup& grp = act.group();
  bool axioms = true;
  for (int x = 0; x < e.size(); ++x) axioms = axioms && act.Act(grp.identity(), x) == x;
  for (int a = 0; a < grp.order(); ++a)
    for (int b = 0; b < grp.order(); ++b)
      for (int x = 0; x < e.size(); ++x)
        axioms = axioms && act.Act(grp.Mul(a, b), x) == act.Act(a, act.Act(b, x));
  json acts = json::array();
  for (int a = 0; a < grp.order(); ++a) acts.push_back(act.ActionOf(a));
  json out = {{"group_order", grp.order()},
              {"link", EqrelToJson(l)},
              {"action", acts},
              {"action_axioms", axioms},
              {"class_bijective", IsClassBijective(e, act)},
              {"induces_outer", InducesOuterAction(e, act, outer)}};
  out["ok"] = axioms && out["class_bijective"].get<bool>() && out["induces_outer"].get<bool>();
  return out;
}

json TaskSmoothLink(const json& inst, const TaskParams&) {
  FinEqrel e = Rel(inst, "E"), f = Rel(inst, "F");
  FinEqrel l = LinkSmooth(e, f);
  json out = VerificationJson(VerifyLink(e, f, l));
  out["link"] = EqrelToJson(l);
  out["ok"] = out["verdict"];
  return out;
}

json TaskHfLink(const json& inst, const TaskParams&) {
  int n = SizeOf(inst);
  FinEqrel e = Rel(inst, "E");
  std::vector<FinEqrel> chain;
  for (const auto& c : Need(inst, "chain")) chain.push_back(EqrelFromJson(n, c));
  if (chain.empty()) throw InputError("hf-link needs a non-empty chain");
  HfLinkResult r = HfLink(e, chain, Gens(inst));
  json links = json::array();
  bool ok = true;
  for (size_t j = 0; j < r.links.size(); ++j) {
    LinkVerification v = VerifyLink(e, chain[j], r.links[j]);
    bool nested = j == 0 || r.links[j - 1].IsSubrelationOf(r.links[j]);
    ok = ok && v.ok && nested;
    json one = VerificationJson(v);
    one["link"] = EqrelToJson(r.links[j]);
    one["contains_previous"] = nested;
    links.push_back(one);
  }
  return {{"links", links}, {"link", EqrelToJson(r.link)}, {"ok", ok}};
}

json TaskEquidecompose(const json& inst, const TaskParams&) {
  int n = SizeOf(inst);
  FinEqrel e = Rel(inst, "E");
  PointSet a = PointSetFromJson(n, Need(inst, "A")), b = PointSetFromJson(n, Need(inst, "B"));
  auto w = Equidecompose(e, a, b);
  json out = {{"equidecomposable", w.has_value()}};
  bool ok = true;
  if (w) {
    out["witness"] = {{"source", w->source}, {"target", w->target}};
    out["verified"] = VerifyEquidecomposition(e, a, b, *w);
    ok = out["verified"].get<bool>();
  }
  if (inst.contains("copies")) {
    int copies = inst["copies"].get<int>();
    if (copies < 1) throw InputError("copies must be positive");
    FinEqrel big = ProductWithFull(e, copies);
    PointSet na = DisjointCopies(a, copies), nb = DisjointCopies(b, copies);
    auto wn = Equidecompose(big, na, nb);
    out["copies_equidecomposable"] = wn.has_value();
    // Cancellation: nA ∼ nB forces A ∼ B.
    out["cancellation"] = !wn || w.has_value();
    ok = ok && out["cancellation"].get<bool>();
  }
  out["ok"] = ok;
  return out;
}

json TaskChoiceLink(const json& inst, const TaskParams& p) {
  FinEqrel e = Rel(inst, "E"), f = Rel(inst, "F");
  int64_t depth = p.depth ? *p.depth : LazyAmplification::DefaultDepth(e.size());
  ChoiceSequenceLink link(e, f, depth);
  WindowedLinkReport r = link.Verify();
  json stages = json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"name", s.name}, {"ok", s.ok}, {"checked", s.checked}, {"detail", s.detail}});
  }
  return {{"depth", depth},
          {"verified_exact", r.verified_exact},
          {"consistent_so_far", r.consistent_so_far},
          {"violations", r.violations},
          {"stages", stages},
          {"notes", r.notes},
          {"ok", r.ok()}};
}

MarkedGroup LatticeGroup(const std::string& name) {
  MarkedGroup g = MarkedGroup::FromName(name);
  if (!g.is_lattice()) throw InputError("group must be z or z2");
  return g;
}

// Intervals (or x-axis segments in ℤ²) [0, L_i) with L_{k−1} = 1 and each
// L_i the least length meeting the (B_{i+1}^{-1}, η_i/|B_{i+1}|) demand.
std::vector<ElemSet> AxisChain(const MarkedGroup& g, const QuasiTilingConstants& c) {
  auto segment = [&](int64_t len) {
    return g.dimension() == 2 ? Box2(0, len, 0, 1) : IntegerInterval(0, len);
  };
  std::vector<ElemSet> chain(c.k);
  chain[c.k - 1] = segment(1);
  for (int i = c.k - 2; i >= 0; --i) {
    const Rational l(static_cast<int64_t>(chain[i + 1].size()));
    const Rational demand = c.eta[i] / l;
    Rational need = l * (l - 1) / c.eta[i];
    mpz_class len = need.get_num() / need.get_den();
    if (len * need.get_den() < need.get_num()) ++len;
    int64_t m = std::max<int64_t>(len.get_si(), static_cast<int64_t>(chain[i + 1].size()) + 1);
    if (len > kFolnerSizeCap) {
      throw ConstraintViolation("folner-cap", "chain shape B_" + std::to_string(i) + " needs " +
                                                  len.get_str() + " elements");
    }
    while (InvarianceDefect(g, segment(m), InverseSet(g, chain[i + 1])) > demand) ++m;
    chain[i] = segment(m);
  }
  return chain;
}

json TaskTile(const json&, const TaskParams& p) {
  MarkedGroup g = LatticeGroup(p.group);
  const Rational eb = ParseRational(p.eps.value_or("1/4"));
  const int levels = p.levels.value_or(1);
  if (levels < 1) throw InputError("tile needs at least one target");
  QuasiTilingConstants c = ComputeConstants(eb);
  // Least outer ε the lemma certifies, pushed halfway to 1 for strictness.
  const Rational s = 1 - 2 * eb;
  const Rational outer = (std::max<Rational>(2 * eb, 1 - s * s * s) + 1) / 2;
  std::vector<ElemSet> chain = AxisChain(g, c);
  const int64_t height = g.dimension() == 2 ? 16 : 1;
  const Rational w0 = Rational(static_cast<int64_t>(chain[0].size()) - 1) / c.delta + 1;
  int64_t width = std::max<int64_t>(mpz_class(w0.get_num() / w0.get_den()).get_si(), 2);
  json targets = json::array();
  bool ok = true;
  for (int lv = 0; lv < levels; ++lv) {
    json attempts = json::array();
    for (;;) {
      if (width * height > kFolnerSizeCap) {
        throw ConstraintViolation("folner-cap", "no target below " + std::to_string(kFolnerSizeCap) +
                                                    " elements admits the induction");
      }
      ElemSet a = g.dimension() == 2 ? Box2(0, width, 0, height) : IntegerInterval(0, width);
      try {
        QuasiTileResult r = QuasiTile(g, a, chain, outer, eb);
        TilingReport rep = CheckTiling(g, r.tiling);
        ok = ok && rep.ok() && r.ledger.all_pass();
        targets.push_back({{"a", ElemSetToJson(g, a)},
                           {"rejected_sizes", attempts},
                           {"result", r.ToJson(g)},
                           {"check", rep.ToJson()}});
        break;
      } catch (const ConstraintViolation& e) {
        attempts.push_back({{"size", static_cast<int64_t>(a.size())}, {"constraint", e.constraint()}});
        width *= 2;
      }
    }
    width *= 2;
  }
  json cj = {{"k", c.k}, {"delta", ToJson(c.delta)}};
  cj["p"] = json::array();
  cj["eta"] = json::array();
  for (const auto& v : c.p) cj["p"].push_back(ToJson(v));
  for (const auto& v : c.eta) cj["eta"].push_back(ToJson(v));
  json chain_j = json::array();
  for (const auto& b : chain) chain_j.push_back(ElemSetToJson(g, b));
  return {{"group", g.name()}, {"eps_bar", ToJson(eb)},  {"outer_eps", ToJson(outer)},
          {"constants", cj},   {"chain", chain_j},        {"targets", targets},
          {"ok", ok}};
}

std::vector<Rational> EpsSequence(const TaskParams& p, int count, int shift) {
  if (p.eps_seq) return ParseRationalList(*p.eps_seq);
  if (p.eps) return std::vector<Rational>(count, ParseRational(*p.eps));
  std::vector<Rational> out;
  for (int n = 0; n < count; ++n) out.push_back(Pow(Rational(2), -(n + shift)));
  return out;
}

json TaskHierarchy(const json&, const TaskParams& p) {
  MarkedGroup g = LatticeGroup(p.group);
  const int levels = p.levels.value_or(3);
  TilingHierarchy h = BuildHierarchy(g, EpsSequence(p, levels, 2), levels);
  json out = h.ToJson(g);
  out["ok"] = h.ledger.all_pass();
  return out;
}

json TaskLiftSim(const json&, const TaskParams& p) {
  MarkedGroup g = LatticeGroup(p.group);
  const int stages = p.stages.value_or(4);
  TilingHierarchy h = BuildHierarchy(g, EpsSequence(p, stages, 3), stages);
  Tower t = BuildTower(g, h, stages);
  json out = t.ToJson(g, p.full);
  json radii = json::array();
  for (const auto& lv : h.levels) radii.push_back(lv.radius);
  out["hierarchy"] = {{"radii", radii}, {"all_pass", h.ledger.all_pass()}};
  out["ok"] = t.ledger.all_pass();
  return out;
}

json TaskGen(const json&, const TaskParams& p) {
  GenParams gp;
  gp.size = p.size;
  gp.index = p.index;
  json out = InstanceToJson(GenerateInstance(p.seed, gp));
  out["seed"] = p.seed;
  return out;
}

using TaskFn = std::function<json(const json&, const TaskParams&)>;

const std::map<std::string, TaskFn>& Registry() {
  static const auto* r = new std::map<std::string, TaskFn>{
      {"verify-link", TaskVerifyLink}, {"link", TaskLink},
      {"extend-link", TaskExtendLink}, {"lift", TaskLift},
      {"smooth-link", TaskSmoothLink}, {"hf-link", TaskHfLink},
      {"equidecompose", TaskEquidecompose}, {"choice-link", TaskChoiceLink},
      {"tile", TaskTile},              {"hierarchy", TaskHierarchy},
      {"lift-sim", TaskLiftSim},       {"gen", TaskGen}};
  return *r;
}

json ErrorJson(const char* kind, const std::string& msg) { return {{"kind", kind}, {"message", msg}}; }

}  // namespace

json TaskParams::ToJson() const {
  json j = {{"group", group}, {"seed", seed}, {"size", size}, {"index", index}, {"full", full}};
  if (eps) j["eps"] = *eps;
  if (eps_seq) j["eps_seq"] = *eps_seq;
  if (levels) j["levels"] = *levels;
  if (stages) j["stages"] = *stages;
  if (depth) j["depth"] = *depth;
  return j;
}

TaskParams TaskParams::FromJson(const json& j) {
  TaskParams p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw InputError("params must be an object");
  try {
    if (j.contains("group")) p.group = j["group"].get<std::string>();
    if (j.contains("eps")) p.eps = j["eps"].get<std::string>();
    if (j.contains("eps_seq")) p.eps_seq = j["eps_seq"].get<std::string>();
    if (j.contains("levels")) p.levels = j["levels"].get<int>();
    if (j.contains("stages")) p.stages = j["stages"].get<int>();
    if (j.contains("depth")) p.depth = j["depth"].get<int64_t>();
    if (j.contains("seed")) p.seed = j["seed"].get<uint64_t>();
    if (j.contains("size")) p.size = j["size"].get<int>();
    if (j.contains("index")) p.index = j["index"].get<int>();
    if (j.contains("full")) p.full = j["full"].get<bool>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad parameter: ") + e.what());
  }
  return p;
}

const std::vector<std::string>& TaskNames() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [k, fn] : Registry()) v->push_back(k);
    return v;
  }();
  return *names;
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseRational(item));
  if (out.empty()) throw InputError("empty rational list");
  return out;
}

TaskResult RunTask(const std::string& task, const json& instance, const TaskParams& p) {
  TaskResult r;
  json& rep = r.report;
  rep["task"] = task;
  rep["params"] = p.ToJson();
  auto it = Registry().find(task);
  try {
    if (it == Registry().end()) throw InputError("unknown task \"" + task + "\"");
    json out = it->second(instance, p);
    bool ok = out.value("ok", true);
    rep["result"] = std::move(out);
    rep["ok"] = ok;
    r.exit_code = ok ? kExitPass : kExitAssertion;
  } catch (const ConstraintViolation& e) {
    rep["ok"] = false;
    rep["error"] = ErrorJson("constraint", e.what());
    rep["error"]["constraint"] = e.constraint();
    r.exit_code = kExitAssertion;
  } catch (const InputError& e) {
    rep["ok"] = false;
    rep["error"] = ErrorJson("input", e.what());
    r.exit_code = kExitInput;
  } catch (const PreconditionError& e) {
    rep["ok"] = false;
    rep["error"] = ErrorJson("precondition", e.what());
    r.exit_code = kExitInput;
  } catch (const WindowError& e) {
    rep["ok"] = false;
    rep["error"] = ErrorJson("window", e.what());
    r.exit_code = kExitInput;
  } catch (const json::exception& e) {
    rep["ok"] = false;
    rep["error"] = ErrorJson("input", e.what());
    r.exit_code = kExitInput;
  }
  rep["exit_code"] = r.exit_code;
  return r;
}

TaskResult RunScenario(const json& scenario) {
  if (!scenario.is_object() || !scenario.contains("task") || !scenario["task"].is_string()) {
    TaskResult r;
    r.report = {{"ok", false},
                {"error", ErrorJson("input", "scenario needs a string \"task\"")},
                {"exit_code", kExitInput}};
    r.exit_code = kExitInput;
    return r;
  }
  TaskParams p;
  try {
    p = TaskParams::FromJson(scenario.value("params", json()));
  } catch (const InputError& e) {
    TaskResult r;
    r.report = {{"ok", false}, {"error", ErrorJson("input", e.what())}, {"exit_code", kExitInput}};
    r.exit_code = kExitInput;
    return r;
  }
  json instance = scenario.value("instance", json::object());
  if (instance.is_string()) {
    try {
      instance = ReadJsonFile(instance.get<std::string>());
    } catch (const InputError& e) {
      TaskResult r;
      r.report = {{"ok", false}, {"error", ErrorJson("input", e.what())}, {"exit_code", kExitInput}};
      r.exit_code = kExitInput;
      return r;
    }
  }
  TaskResult r = RunTask(scenario["task"], instance, p);
  r.report["scenario"] = scenario;
  if (r.exit_code == kExitPass && scenario.contains("expect")) {
    json mismatches = json::array();
    for (const auto& [key, want] : scenario["expect"].items()) {
      const json& res = r.report["result"];
      if (!res.contains(key) || res[key] != want) mismatches.push_back(key);
    }
    r.report["expect_mismatches"] = mismatches;
    if (!mismatches.empty()) {
      r.report["ok"] = false;
      r.exit_code = kExitAssertion;
      r.report["exit_code"] = r.exit_code;
    }
  }
  return r;
}

}  // namespace quotlift::cli
