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

// quotlift: batch front end. Every subcommand prints one canonical JSON
// report (or writes it to --out) and exits 0 on success, 1 when a checked
// assertion fails and 2 on bad input.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quotlift/errors.h"
#include "quotlift/instance_io.h"
#include "quotlift_cli/suite.h"
#include "quotlift_cli/tasks.h"

namespace {

using nlohmann::json;
using quotlift::cli::kExitInput;

struct Options {
  std::string instance;
  std::string out;
  std::string scenario;
  std::string eps;
  std::string eps_seq;
  int levels = 0;
  int stages = 0;
  int64_t depth = 0;
  bool summary = false;
  std::vector<int> only;
  quotlift::cli::TaskParams params;
};

int Emit(const Options& o, const json& report, int code) {
  const std::string text = quotlift::CanonicalDump(report);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    quotlift::WriteJsonFile(o.out, report);
  }
  return code;
}

json ErrorReport(const std::string& task, const std::string& message) {
  return {{"task", task},
          {"ok", false},
          {"exit_code", kExitInput},
          {"error", {{"kind", "input"}, {"message", message}}}};
}

int RunOne(const std::string& task, Options& o, CLI::App& sub) {
  quotlift::cli::TaskParams& p = o.params;
  if (sub.count("--eps")) p.eps = o.eps;
  if (sub.count("--eps-seq")) p.eps_seq = o.eps_seq;
  if (sub.count("--levels")) p.levels = o.levels;
  if (sub.count("--stages")) p.stages = o.stages;
  if (sub.count("--depth")) p.depth = o.depth;
  p.full = !o.summary;
  json instance = json::object();
  try {
    if (!o.instance.empty()) instance = quotlift::ReadJsonFile(o.instance);
  } catch (const quotlift::InputError& e) {
    return Emit(o, ErrorReport(task, e.what()), kExitInput);
  }
  quotlift::cli::TaskResult r = quotlift::cli::RunTask(task, instance, p);
  // gen prints the instance itself so that it can be fed back via --instance.
  if (task == "gen" && r.exit_code == quotlift::cli::kExitPass) return Emit(o, r.report["result"], r.exit_code);
  return Emit(o, r.report, r.exit_code);
}

int RunSuiteCommand(const Options& o) {
  json lines = json::array();
  bool all = true;
  quotlift::cli::RunSuite(o.only, [&](const quotlift::cli::CriterionResult& r) {
    std::cerr << quotlift::cli::FormatResult(r) << std::endl;
    all = all && r.pass;
    lines.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  });
  const int code = all ? quotlift::cli::kExitPass : quotlift::cli::kExitAssertion;
  return Emit(o, {{"task", "suite"}, {"criteria", lines}, {"ok", all}, {"exit_code", code}}, code);
}

int RunScenarioCommand(const Options& o) {
  json scenario;
  try {
    scenario = quotlift::ReadJsonFile(o.scenario);
  } catch (const quotlift::InputError& e) {
    return Emit(o, ErrorReport("run", e.what()), kExitInput);
  }
  quotlift::cli::TaskResult r = quotlift::cli::RunScenario(scenario);
  return Emit(o, r.report, r.exit_code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quotlift: links, lifts and quasi-tilings for countable Borel equivalence relations"};
  app.require_subcommand(1);
  Options o;

  std::map<std::string, CLI::App*> subs;
  for (const std::string& name : quotlift::cli::TaskNames()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " task");
    sub->add_option("--instance", o.instance, "instance JSON file");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--seed", o.params.seed, "random seed");
    sub->add_option("--eps", o.eps, "ε as an exact rational, e.g. 1/4");
    sub->add_option("--eps-seq", o.eps_seq, "comma separated ε_n");
    sub->add_option("--levels", o.levels, "hierarchy levels or tiling targets")->check(CLI::PositiveNumber);
    sub->add_option("--stages", o.stages, "tower stages")->check(CLI::PositiveNumber);
    sub->add_option("--depth", o.depth, "window depth")->check(CLI::PositiveNumber);
    sub->add_option("--group", o.params.group, "z or z2");
    sub->add_option("--size", o.params.size, "points per generated instance");
    sub->add_option("--index", o.params.index, "E-classes per F-class in generated instances");
    sub->add_flag("--summary", o.summary, "lift-sim: omit the φ pieces");
    subs[name] = sub;
  }

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--only", o.only, "criterion ids")->check(CLI::Range(1, quotlift::cli::kNumCriteria));
  suite->add_option("--out", o.out, "write the summary here instead of stdout");

  CLI::App* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("--scenario", o.scenario, "scenario JSON file")->required();
  run->add_option("--out", o.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (suite->parsed()) return RunSuiteCommand(o);
    if (run->parsed()) return RunScenarioCommand(o);
    for (auto& [name, sub] : subs) {
      if (sub->parsed()) return RunOne(name, o, *sub);
    }
  } catch (const quotlift::InputError& e) {
    std::cerr << "quotlift: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
