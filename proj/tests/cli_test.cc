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

#include <sys/wait.h>

#include <cstdio>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "quotlift/automorphism.h"
#include "quotlift/errors.h"
#include "quotlift/instance_io.h"
#include "quotlift/link.h"
#include "quotlift_cli/generator.h"
#include "quotlift_cli/tasks.h"

namespace quotlift::cli {
namespace {

using nlohmann::json;

std::string Scenario(const std::string& name) {
  return std::string(QUOTLIFT_SOURCE_DIR) + "/scenarios/" + name;
}

// Runs the binary and returns its exit status; stdout lands in `out`.
int RunCli(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(QUOTLIFT_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::string text;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
  int status = pclose(pipe);
  if (out != nullptr) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(GeneratorTest, SeedOneSizeSixIndexTwo) {
  Instance inst = GenerateInstance(1, GenParams{6, 2, 2});
  ASSERT_TRUE(inst.f.has_value());
  ExtensionResult ext = ExtendByGroup(inst.e, inst.gens);
  EXPECT_TRUE(ext.normal);
  EXPECT_EQ(ext.extended, *inst.f);
  EXPECT_EQ(IndexProfile(inst.e, *inst.f), std::vector<int>(inst.f->num_classes(), 2));
}

TEST(GeneratorTest, IndexOneGivesEqualRelations) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = GenerateInstance(seed, GenParams{8, 1, 2});
    EXPECT_EQ(inst.e, *inst.f);
  }
}

TEST(GeneratorTest, WitnessAlwaysValid) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    GenParams p{static_cast<int>(1 + seed % 24), static_cast<int>(1 + seed % 5), static_cast<int>(1 + seed % 3)};
    p.index = std::min(p.index, p.size);
    Instance inst = GenerateInstance(seed, p);
    EXPECT_NO_THROW(ValidateNormalityWitness(inst.e, *inst.f, inst.gens)) << "seed " << seed;
  }
}

TEST(GeneratorTest, RejectsBadBounds) {
  EXPECT_THROW(GenerateInstance(1, GenParams{65, 2, 2}), InputError);
  EXPECT_THROW(GenerateInstance(1, GenParams{6, 7, 2}), InputError);
  EXPECT_THROW(GenerateInstance(1, GenParams{6, 2, 0}), InputError);
}

TEST(GeneratorTest, SameSeedSameBytes) {
  std::string a, b, c;
  ASSERT_EQ(RunCli("gen --seed 7 --size 10 --index 3", &a), 0);
  ASSERT_EQ(RunCli("gen --seed 7 --size 10 --index 3", &b), 0);
  ASSERT_EQ(RunCli("gen --seed 8 --size 10 --index 3", &c), 0);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(InstanceJsonTest, RoundTrip) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = GenerateInstance(seed, GenParams{12, 3, 2});
    json j = InstanceToJson(inst);
    Instance back = InstanceFromJson(json::parse(CanonicalDump(j)));
    EXPECT_EQ(back.e, inst.e);
    EXPECT_EQ(*back.f, *inst.f);
    EXPECT_EQ(back.gens, inst.gens);
    EXPECT_EQ(CanonicalDump(InstanceToJson(back)), CanonicalDump(j));
  }
}

TEST(InstanceJsonTest, WitnessKeyAndErrors) {
  json j = json::parse(R"({"n": 4, "E": [[0, 1], [2, 3]], "witness": {"gens": [[2, 3, 0, 1]]}})");
  Instance inst = InstanceFromJson(j);
  EXPECT_EQ(inst.gens.size(), 1u);
  EXPECT_THROW(InstanceFromJson(json::parse(R"({"E": [[0]]})")), InputError);
  EXPECT_THROW(InstanceFromJson(json::parse(R"({"n": 2, "E": [[0, 1]], "gens": [[0, 0]]})")), InputError);
  EXPECT_THROW(InstanceFromJson(json::parse(R"({"n": 2, "E": [[0, "x"]]})")), InputError);
}

TEST(TaskParamsTest, RoundTrip) {
  TaskParams p;
  p.group = "z2";
  p.eps = "1/4";
  p.levels = 3;
  p.seed = 99;
  TaskParams q = TaskParams::FromJson(p.ToJson());
  EXPECT_EQ(q.ToJson(), p.ToJson());
  EXPECT_THROW(TaskParams::FromJson(json::parse(R"({"levels": "two"})")), InputError);
}

TEST(RunTaskTest, ReportsAreDeterministic) {
  Instance inst = GenerateInstance(3, GenParams{9, 3, 2});
  TaskResult a = RunTask("link", InstanceToJson(inst), TaskParams{});
  TaskResult b = RunTask("link", InstanceToJson(inst), TaskParams{});
  EXPECT_EQ(a.exit_code, kExitPass);
  EXPECT_EQ(CanonicalDump(a.report), CanonicalDump(b.report));
}

TEST(RunTaskTest, UnknownTaskIsInputError) {
  TaskResult r = RunTask("teleport", json::object(), TaskParams{});
  EXPECT_EQ(r.exit_code, kExitInput);
  EXPECT_EQ(r.report["error"]["kind"], "input");
}

TEST(RunTaskTest, AllTasksRegistered) {
  for (const char* name : {"verify-link", "link", "extend-link", "lift", "smooth-link", "hf-link",
                           "equidecompose", "choice-link", "tile", "hierarchy", "lift-sim", "gen"}) {
    EXPECT_NE(std::find(TaskNames().begin(), TaskNames().end(), name), TaskNames().end()) << name;
  }
}

TEST(ScenarioTest, VerifyLinkSixPoints) {
  TaskResult r = RunScenario(ReadJsonFile(Scenario("verify_link_six_points.json")));
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.report["result"]["verdict"], true);
}

TEST(ScenarioTest, MalformedClassesExitTwo) {
  std::string out;
  EXPECT_EQ(RunCli("run --scenario " + Scenario("verify_link_malformed.json"), &out), kExitInput);
  json rep = json::parse(out);
  EXPECT_EQ(rep["error"]["kind"], "input");
}

TEST(ScenarioTest, ExpectationMismatchExitsOne) {
  json s = ReadJsonFile(Scenario("verify_link_six_points.json"));
  s["expect"]["verdict"] = false;
  TaskResult r = RunScenario(s);
  EXPECT_EQ(r.exit_code, kExitAssertion);
  EXPECT_EQ(r.report["expect_mismatches"], json::array({"verdict"}));
}

TEST(ScenarioTest, TileLedgerPasses) {
  TaskResult r = RunScenario(ReadJsonFile(Scenario("tile_z.json")));
  ASSERT_EQ(r.exit_code, kExitPass) << r.report.dump();
  EXPECT_EQ(r.report["result"]["targets"].size(), 2u);
  EXPECT_EQ(r.report["result"]["outer_eps"], json({{"num", 15}, {"den", 16}}));
}

TEST(ScenarioTest, ShippedScenariosPass) {
  for (const char* name : {"link_six_points.json", "equidecompose_cancellation.json", "lift_sim_two_stages.json"}) {
    TaskResult r = RunScenario(ReadJsonFile(Scenario(name)));
    EXPECT_EQ(r.exit_code, kExitPass) << name << ": " << r.report.dump();
  }
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli("link --instance /nonexistent.json"), kExitInput);
  EXPECT_EQ(RunCli("no-such-command"), kExitInput);
  EXPECT_EQ(RunCli("suite --only 11"), kExitPass);
  std::string out;
  ASSERT_EQ(RunCli("gen --seed 1 --size 6 --index 2", &out), 0);
  const std::string path = ::testing::TempDir() + "quotlift_gen.json";
  std::ofstream(path) << out;
  EXPECT_EQ(RunCli("link --instance " + path), kExitPass);
  EXPECT_EQ(RunCli("lift --instance " + path), kExitPass);
  // A link task without F is an input error.
  std::ofstream(path) << R"({"n": 2, "E": [[0], [1]]})";
  EXPECT_EQ(RunCli("link --instance " + path), kExitInput);
}

TEST(CliTest, RationalsCrossAsPairs) {
  std::string out;
  ASSERT_EQ(RunCli("hierarchy --group z --levels 1", &out), 0);
  json rep = json::parse(out);
  std::function<bool(const json&)> no_floats = [&](const json& j) {
    if (j.is_number_float()) return false;
    if (j.is_structured())
      for (const auto& v : j) if (!no_floats(v)) return false;
    return true;
  };
  EXPECT_TRUE(no_floats(rep));
}

}  // namespace
}  // namespace quotlift::cli
