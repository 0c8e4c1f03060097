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

#ifndef QUOTLIFT_CLI_SUITE_H_
#define QUOTLIFT_CLI_SUITE_H_

#include <functional>
#include <string>
#include <vector>

namespace quotlift::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kNumCriteria = 11;

CriterionResult RunCriterion(int id);

// Runs the selected criteria (all when empty) and hands each result to
// `sink` as soon as it is known.
std::vector<CriterionResult> RunSuite(const std::vector<int>& only,
                                      const std::function<void(const CriterionResult&)>& sink);

// "criterion N: PASS|FAIL title (detail) [t s]".
std::string FormatResult(const CriterionResult& r);

}  // namespace quotlift::cli

#endif  // QUOTLIFT_CLI_SUITE_H_
