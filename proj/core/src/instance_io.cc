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

#include "quotlift/instance_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quotlift/errors.h"

namespace quotlift {
namespace {

std::vector<int> IntArray(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must contain integers only");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

nlohmann::json EqrelToJson(const FinEqrel& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : e.classes()) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const nlohmann::json& a, const nlohmann::json& b) { return a[0] < b[0]; });
  return out;
}

FinEqrel EqrelFromJson(int n, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("an equivalence relation is an array of classes");
  std::vector<std::vector<int>> classes;
  for (const auto& c : j) classes.push_back(IntArray(c, "class"));
  return FinEqrel::FromClasses(n, classes);
}

nlohmann::json PermsToJson(const std::vector<Perm>& perms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : perms) out.push_back(p);
  return out;
}

std::vector<Perm> PermsFromJson(int n, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("generators must be an array of permutations");
  std::vector<Perm> out;
  for (const auto& p : j) {
    Perm perm = IntArray(p, "permutation");
    ValidatePermutation(perm, n);
    out.push_back(std::move(perm));
  }
  return out;
}

nlohmann::json InstanceToJson(const Instance& inst) {
  nlohmann::json j = {{"n", inst.e.size()}, {"E", EqrelToJson(inst.e)}};
  if (inst.f) j["F"] = EqrelToJson(*inst.f);
  if (!inst.gens.empty()) j["gens"] = PermsToJson(inst.gens);
  return j;
}

Instance InstanceFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("instance needs integer \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw InputError("instance size must be positive");
  if (!j.contains("E")) throw InputError("instance needs \"E\"");
  Instance inst{EqrelFromJson(n, j["E"]), std::nullopt, {}};
  if (j.contains("F")) inst.f = EqrelFromJson(n, j["F"]);
  if (j.contains("gens")) {
    inst.gens = PermsFromJson(n, j["gens"]);
  } else if (j.contains("witness")) {
    const auto& w = j["witness"];
    if (!w.is_object() || !w.contains("gens")) throw InputError("witness must be {\"gens\": [...]}");
    inst.gens = PermsFromJson(n, w["gens"]);
  }
  return inst;
}

nlohmann::json GroupToJson(const FinGroup& g) {
  if (g.is_permutation_group()) {
    std::vector<Perm> gens;
    for (int a : g.generators()) gens.push_back(g.AsPermutation(a));
    return {{"gens", PermsToJson(gens)}};
  }
  return {{"order", g.order()}, {"mul", g.table()}};
}

FinGroup GroupFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("group must be a JSON object");
  if (j.contains("mul")) {
    std::vector<std::vector<int>> mul;
    for (const auto& row : j["mul"]) mul.push_back(IntArray(row, "multiplication row"));
    if (j.contains("order") && j["order"] != static_cast<int>(mul.size())) {
      throw InputError("group order does not match the table");
    }
    return FinGroup::FromTable(std::move(mul));
  }
  if (j.contains("gens")) {
    const auto& gens = j["gens"];
    if (!gens.is_array() || gens.empty()) throw InputError("group needs at least one generator");
    int degree = static_cast<int>(gens[0].size());
    return FinGroup::FromPermutations(PermsFromJson(degree, gens), degree);
  }
  throw InputError("group must carry \"mul\" or \"gens\"");
}

PointSet PointSetFromJson(int n, const nlohmann::json& j) {
  PointSet s = IntArray(j, "point set");
  ValidatePointSet(n, s);
  return s;
}

nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

std::string CanonicalDump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void WriteJsonFile(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << CanonicalDump(j);
}

}  // namespace quotlift
