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

#ifndef QUOTLIFT_CLI_TASKS_H_
#define QUOTLIFT_CLI_TASKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quotlift/rational.h"

namespace quotlift::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitInput = 2;

struct TaskParams {
  std::string group = "z";
  std::optional<std::string> eps;      // one rational, e.g. "1/4"
  std::optional<std::string> eps_seq;  // comma separated rationals
  std::optional<int> levels;
  std::optional<int> stages;
  std::optional<int64_t> depth;
  uint64_t seed = 1;
  int size = 6;
  int index = 2;
  bool full = true;                    // lift-sim: emit every φ piece

  nlohmann::json ToJson() const;
  static TaskParams FromJson(const nlohmann::json& j);
};

struct TaskResult {
  nlohmann::json report;
  int exit_code = kExitPass;
};

const std::vector<std::string>& TaskNames();

// Runs one registered task. Input problems become exit code 2 and failed
// assertions exit code 1; the report always says which.
TaskResult RunTask(const std::string& task, const nlohmann::json& instance, const TaskParams& p);

// {"task": ..., "instance": {...}, "params": {...}, "expect": {...}}. Every
// key of "expect" must equal the same key of the task report.
TaskResult RunScenario(const nlohmann::json& scenario);

std::vector<Rational> ParseRationalList(const std::string& text);

}  // namespace quotlift::cli

#endif  // QUOTLIFT_CLI_TASKS_H_
