// Copyright 2026 The padelimit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("padelimit_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = scratch() / "stdout";
  const fs::path err = scratch() / "stderr";
  const std::string cmd = std::string(PADELIMIT_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string model(const std::string& name) {
  return std::string("--model ") + PADELIMIT_MODELS + "/" + name + ".json";
}

json find_point(const json& report, const std::string& zeta) {
  for (const auto& p : report["limit_set"]["additional_points"]) {
    if (p["zeta"] == zeta) return p;
  }
  return nullptr;
}

TEST(CliTest, AnalyzeExampleOne) {
  const auto r = run("analyze " + model("ex1"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["C"], json::array({"1", "2", "16/9"}));
  EXPECT_EQ(find_point(j, "1/3")["verdict"], "Converges");
  EXPECT_EQ(find_point(j, "3")["verdict"], "DivergesToInfinity");
}

TEST(CliTest, AnalyzeExampleThreeFlagsCoincidence) {
  const auto r = run("analyze " + model("ex3"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto p = find_point(json::parse(r.out), "1/2");
  EXPECT_EQ(p["coincides_with_pole"], 2);
  EXPECT_EQ(p["verdict"], "Unclassified-Coincident");
}

TEST(CliTest, SubdominantTieExitsWithDiagnostic) {
  const auto r = run(
      "analyze --model-json '{\"poles\":[{\"z\":\"1\",\"residue\":\"1\"},{\"z\":\"-1\",\"residue\":\"1\"},"
      "{\"z\":\"1/2\",\"residue\":\"1\"},{\"z\":\"-1/2\",\"residue\":\"1\"}]}'");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["code"], "SubdominantTie");
}

TEST(CliTest, MalformedInputExitsWithParseError) {
  auto r = run("analyze --model-json '{\"poles\": [}'");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"]["code"], "ParseError");
  r = run("analyze --model-json '{\"poles\":[{\"z\":\"1/0\",\"residue\":\"1\"}]}'");
  EXPECT_EQ(r.code, 1);
  r = run("analyze --model /nonexistent/model.json");
  EXPECT_EQ(r.code, 1);
  r = run("frobnicate");
  EXPECT_EQ(r.code, 1);
}

TEST(CliTest, ApproxExampleFourVanishes) {
  const auto r = run("approx " + model("ex4") + " --n 3 --point -1/2");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["points"][0]["value"], "0");
  EXPECT_EQ(j["points"][0]["r"], "-1");
  EXPECT_TRUE(j["points"][0]["residual_identity_holds"].get<bool>());
}

TEST(CliTest, ApproxOracleAgreementAndPoleEntry) {
  const auto r = run("approx " + model("ex1") + " --n 5 --point 1/2 --point 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["oracle"]["status"], "agree");
  EXPECT_EQ(j["points"][0]["error"]["code"], "EvalAtPole");
  EXPECT_TRUE(j["points"][1].contains("value"));
}

TEST(CliTest, VerifyMatchesPredictions) {
  struct Case {
    const char* model;
    const char* point;
    const char* observed;
  };
  for (const Case c : {Case{"ex2", "-4/5", "DivergesToInfinity"}, Case{"ex1", "1/3", "ConvergesToR"},
                       Case{"ex4", "-1/2", "Stationary-NotR"}}) {
    const fs::path csv = scratch() / "trace.csv";
    const auto r = run(std::string("verify ") + model(c.model) + " --point " + c.point +
                       " --n-max 60 --csv " + csv.string());
    ASSERT_EQ(r.code, 0) << c.model << " " << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["observed"], c.observed);
    EXPECT_TRUE(j["match"].get<bool>());
    const std::string text = slurp(csv);
    EXPECT_EQ(text.rfind("n,m,value_re,value_im,error,nearest_root_distance\n", 0), 0u);
    EXPECT_EQ(text.find('\r'), std::string::npos);
  }
  const auto ex4 = json::parse(run("verify " + model("ex4") + " --point -1/2").out);
  EXPECT_EQ(ex4["predicted"], "NoLimitOnCircle");
}

TEST(CliTest, TrajectoryOfASinglePoleIsHeaderOnly) {
  const auto r = run("trajectory --model-json '{\"poles\":[{\"z\":\"2\",\"residue\":\"1\"}]}' --n-max 10");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,m,root_index,root_re,root_im,nearest_target,distance\n");
}

TEST(CliTest, TrajectoryWritesCsvAndSummary) {
  const fs::path csv = scratch() / "poles.csv";
  const auto r = run("trajectory " + model("ex1") + " --n-max 60 --csv " + csv.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["targets"].size(), 3u);
  EXPECT_EQ(j["targets"][1]["target"], "omega0:1/3");
  const auto& d = j["targets"][1]["nearest_root_distance"];
  EXPECT_LT(d[59].get<double>(), 1e-6);
  std::istringstream lines(slurp(csv));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 1u + 61u * 2u);
}

TEST(CliTest, OutputIsDeterministic) {
  const auto a = run("analyze " + model("ex2"));
  const auto b = run("analyze " + model("ex2"));
  EXPECT_EQ(a.out, b.out);
  const auto c = run("verify " + model("ex1") + " --point 1/3 --mode float");
  const auto d = run("verify " + model("ex1") + " --point 1/3 --mode float");
  EXPECT_EQ(c.out, d.out);
  EXPECT_EQ(json::parse(c.out)["mode"], "float");
}

TEST(CliTest, IrrationalPolesFallBackToFloat) {
  const auto r = run("analyze --model-json '{\"num\":[\"1\"],\"den\":[\"0\",\"-2\",\"0\",\"1\"]}'");
  // poles 0 and +-sqrt(2)
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["mode"], "float");
  const auto forced = run("analyze --mode exact --model-json '{\"num\":[\"1\"],\"den\":[\"-2\",\"0\",\"1\"]}'");
  EXPECT_EQ(forced.code, 2);
  EXPECT_EQ(json::parse(forced.err)["error"]["code"], "IrrationalPole");
}

}  // namespace
