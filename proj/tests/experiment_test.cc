// Copyright 2026 The Schmidt Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schmidt/experiment.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <regex>
#include <sstream>
#include <string>

namespace schmidt {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result RunSpec(const ExperimentSpec& spec) {
  std::ostringstream out, err;
  Result r;
  r.code = Run(spec, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

ExperimentSpec Spec(std::string sub, nlohmann::json params, std::uint64_t seed = 1) {
  ExperimentSpec s;
  s.subcommand = std::move(sub);
  s.params = std::move(params);
  s.seed = seed;
  return s;
}

TEST(ExperimentTest, WindimDemoPassesAndEmbedsSpec) {
  const Result r = RunSpec(Spec("game windim-demo", {{"N", 2}, {"rounds", 10}}));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("spec"));
  EXPECT_EQ(j["spec"]["subcommand"], "game windim-demo");
  EXPECT_EQ(j["spec"]["params"]["N"], 2);
  EXPECT_EQ(j["spec"]["seed"], 1);
}

TEST(ExperimentTest, SameSpecSameBytes) {
  for (const char* sub : {"game windim-demo", "game play"}) {
    const nlohmann::json params =
        std::string(sub) == "game play"
            ? nlohmann::json{{"white", "random"}, {"black", "random"},
                             {"rounds", 12}}
            : nlohmann::json{{"N", 1}, {"rounds", 12}};
    const Result a = RunSpec(Spec(sub, params, 5));
    const Result b = RunSpec(Spec(sub, params, 5));
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out) << sub;
    const Result c = RunSpec(Spec(sub, params, 6));
    EXPECT_NE(a.out, c.out) << sub;
  }
}

TEST(ExperimentTest, InvalidSpecs) {
  EXPECT_EQ(RunSpec(Spec("nope", nlohmann::json::object())).code,
            kExitInvalidSpec);
  EXPECT_EQ(RunSpec(Spec("game play", {{"alpha", "2"}})).code, kExitInvalidSpec);
  EXPECT_EQ(RunSpec(Spec("game windim-demo", {{"N", 0}})).code,
            kExitInvalidSpec);
  EXPECT_EQ(RunSpec(Spec("badness", {{"matrix", nlohmann::json::parse(R"([["1/2"]])")}, {"cap", 0}})).code,
            kExitInvalidSpec);
  EXPECT_EQ(RunSpec(Spec("ifs render", {{"preset", "cantor"}})).code,
            kExitInvalidSpec);
  EXPECT_EQ(RunSpec(Spec("theorem schedule", {{"R", 0.5}})).code,
            kExitInvalidSpec);
}

TEST(ExperimentTest, RatioCheckExitCodes) {
  EXPECT_EQ(RunSpec(Spec("cf ratio-check", {{"depth", 6}})).code, kExitOk);
  // A large digit makes the child far shorter than 1/12 of its parent.
  EXPECT_EQ(RunSpec(Spec("cf ratio-check", {{"depth", 4}, {"alphabet", "1,3,9"}}))
                .code,
            kExitCheckFailed);
}

TEST(ExperimentTest, CsvHeadersCarryUnits) {
  const std::regex field(R"([a-z_]+\[[a-z ]+\])");
  const std::vector<ExperimentSpec> specs = {
      Spec("cf cylinders", {{"depth", 3}}),
      Spec("badness", {{"matrix", nlohmann::json::parse(R"([["phi"]])")}, {"cap", 30}}),
      Spec("ifs dim", {{"preset", "cantor"}, {"depth", 8}}),
      Spec("measure doubling", {{"preset", "cf13"}, {"depth", 10},
                                {"samples", 4}, {"scales", "3:2:4"}}),
  };
  for (const ExperimentSpec& s : specs) {
    const Result r = RunSpec(s);
    ASSERT_EQ(r.code, kExitOk) << s.subcommand << ": " << r.err;
    const std::string header = r.out.substr(0, r.out.find('\n'));
    std::stringstream ss(header);
    std::string col;
    while (std::getline(ss, col, ',')) {
      EXPECT_TRUE(std::regex_match(col, field)) << s.subcommand << ": " << col;
    }
  }
  const Result bad = RunSpec(Spec("badness", {{"matrix", nlohmann::json::parse(R"([["1/2"]])")}, {"cap", 3}}));
  EXPECT_EQ(bad.out.substr(0, bad.out.find('\n')),
            "cap[count],running_min[dimensionless],exact_min[rational],"
            "witness[integer vector]");
}

TEST(ExperimentTest, ParseHelpers) {
  const auto s = ParseScales("3:1:3");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[2], Rational(1, 27));
  EXPECT_EQ(ParseScales("1/2,0.25"),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 4)}));
  EXPECT_THROW(ParseScales("3:4:1"), std::invalid_argument);
  EXPECT_EQ(ParseLongList("1,3"), (std::vector<long>{1, 3}));
  EXPECT_THROW(ParseLongList("1,x"), std::invalid_argument);
}

Result Shell(const std::string& args) {
  const std::string cmd = std::string(SCHMIDT_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, "", ""};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(CliTest, ExitCodesAndDeterminism) {
  EXPECT_EQ(Shell("cf ratio-check --depth 5").code, 0);
  EXPECT_EQ(Shell("cf ratio-check --depth 3 --alphabet 1,3,9").code, 3);
  EXPECT_EQ(Shell("--bogus").code, 2);
  EXPECT_EQ(Shell("game windim-demo --N 0").code, 2);
  const Result a = Shell("--seed 3 game windim-demo --N 1 --rounds 6");
  const Result b = Shell("--seed 3 game windim-demo --N 1 --rounds 6");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["spec"]["seed"], 3);
}

}  // namespace
}  // namespace schmidt
