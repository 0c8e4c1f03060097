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

#ifndef QUOTLIFT_INSTANCE_IO_H_
#define QUOTLIFT_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quotlift/eqrel.h"
#include "quotlift/group.h"

namespace quotlift {

// {"n": int, "E": [[int]], "F": [[int]]?, "gens": [[int]]?}. The witness may
// also sit under "witness": {"gens": ...}.
struct Instance {
  FinEqrel e;
  std::optional<FinEqrel> f;
  std::vector<Perm> gens;
};

// Classes as sorted arrays, ordered by minimum element.
nlohmann::json EqrelToJson(const FinEqrel& e);
FinEqrel EqrelFromJson(int n, const nlohmann::json& j);

nlohmann::json PermsToJson(const std::vector<Perm>& perms);
std::vector<Perm> PermsFromJson(int n, const nlohmann::json& j);

nlohmann::json InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const nlohmann::json& j);

// {"order": int, "mul": [[int]]} or {"gens": [[int]]}.
nlohmann::json GroupToJson(const FinGroup& g);
FinGroup GroupFromJson(const nlohmann::json& j);

// Point lists such as {"A": [..]}; validated against n.
PointSet PointSetFromJson(int n, const nlohmann::json& j);

nlohmann::json ReadJsonFile(const std::string& path);
// Canonical form: sorted keys, two-space indent, trailing newline.
std::string CanonicalDump(const nlohmann::json& j);
void WriteJsonFile(const std::string& path, const nlohmann::json& j);

}  // namespace quotlift

#endif  // QUOTLIFT_INSTANCE_IO_H_
