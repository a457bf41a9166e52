// Copyright 2026 The Snakedet Authors.
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

#include "snakedet/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "snakedet/multipoly.h"

namespace snakedet {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "snakedet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string WriteTemp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

TEST(CliTest, ExpandAllMethods) {
  Result r = RunArgs({"expand", "--n", "5", "--diagonals", "0-2,0-3", "--arc",
                  "1-3", "--method", "all", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(LaurentExpr::Parse(j["results"]["det"].get<std::string>()),
            LaurentExpr::Parse("(1 + x2)/x1"));
  EXPECT_EQ(j["d"], 1);
  EXPECT_EQ(j["numerator"], "x2 + 1");
  EXPECT_EQ(j["denominator"], "x1");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["sign_measured"], 1);
  EXPECT_EQ(j["sign_corollary"], -1);
}

TEST(CliTest, ExpandTextOutput) {
  Result r = RunArgs({"expand", "--n", "6", "--diagonals", "0-2,0-3,0-4",
                  "--arc", "1-4", "--method", "det"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "det: (x2*x3 + x1 + x3)/x1*x2\n");
}

TEST(CliTest, ArcInTriangulationIsDomainError) {
  Result r = RunArgs({"expand", "--n", "6", "--diagonals", "0-2,0-3,0-4",
                  "--arc", "0-3"});
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.err);
  EXPECT_EQ(j["error"], "ArcInTriangulation");
  EXPECT_TRUE(j.contains("message"));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunArgs({}).code, 2);
  EXPECT_EQ(RunArgs({"expand", "--n", "6"}).code, 2);
  EXPECT_EQ(RunArgs({"expand", "--n", "6", "--diagonals", "0-2,0-3,0-4",
                 "--arc", "1-4", "--method", "magic"})
                .code,
            2);
  EXPECT_EQ(RunArgs({"snake", "fly", "--shape", "R"}).code, 2);
  EXPECT_EQ(RunArgs({"matchings"}).code, 2);
  EXPECT_EQ(RunArgs({"--help"}).code, 0);
}

TEST(CliTest, TileCapFromEnvironment) {
  ::setenv("SNAKE_EXPAND_MAX_D", "2", 1);
  Result r = RunArgs({"expand", "--n", "6", "--diagonals", "0-2,0-3,0-4",
                  "--arc", "1-5", "--method", "det"});
  ::unsetenv("SNAKE_EXPAND_MAX_D");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.err)["error"], "SizeCap");
}

TEST(CliTest, SnakeSubcommands) {
  Result build = RunArgs({"snake", "build", "--shape", "RU"});
  ASSERT_EQ(build.code, 0);
  EXPECT_EQ(json::parse(build.out)["n_edges"], 10);
  Result orient = RunArgs({"snake", "orient", "--shape", "RU"});
  EXPECT_EQ(json::parse(orient.out)["pfaffian_orientation"], true);
  Result matrix = RunArgs({"snake", "matrix", "--shape", "RR"});
  EXPECT_EQ(json::parse(matrix.out)["matrix"].size(), 4u);
  Result sign = RunArgs({"snake", "sign", "--shape", "RU"});
  EXPECT_EQ(json::parse(sign.out)["matches_corollary"], true);
  EXPECT_EQ(RunArgs({"snake", "build", "--shape", "RQ"}).code, 1);
}

TEST(CliTest, MatchingsFromShapeAndGraph) {
  Result r = RunArgs({"matchings", "--shape", "RR"});
  EXPECT_EQ(r.out, "perfect matchings: 5\n");
  std::string path = WriteTemp("snakedet_cli_graph.json",
                               R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
  Result g = RunArgs({"matchings", "--input", path, "--list"});
  ASSERT_EQ(g.code, 0) << g.err;
  json j = json::parse(g.out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["matchings"].size(), 2u);
}

TEST(CliTest, DeterminantFromFile) {
  std::string path = WriteTemp(
      "snakedet_cli_matrix.json",
      R"({"matrix": [["1","0","0","x1"],["-x2","x4","1","0"],)"
      R"(["0","-1","x6","0"],["-x3","0","-x5","x4"]]})");
  Result r = RunArgs({"det", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Polynomial::Parse(r.out),
            Polynomial::Parse("x4^2*x6 + x4 + x1*x2*x5 + x1*x3*x4*x6 + x1*x3"));
  EXPECT_EQ(RunArgs({"det", "--input", "/nonexistent/file.json"}).code, 1);
  std::string bad = WriteTemp("snakedet_cli_bad.json", "[[1, 2], [3");
  EXPECT_EQ(json::parse(RunArgs({"det", "--input", bad}).err)["error"], "ParseError");
}

TEST(CliTest, PfaffianInputs) {
  std::string m = WriteTemp("snakedet_cli_skew.json",
                            R"({"matrix": [["0","a"],["-a","0"]]})");
  Result r = RunArgs({"pfaffian", "--input", m, "--check", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["pfaffian"], "a");
  EXPECT_EQ(json::parse(r.out)["cayley"], true);

  std::string g = WriteTemp(
      "snakedet_cli_oriented.json",
      R"({"graph": {"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]},)"
      R"( "orientation": {"0-1": [0,1], "1-2": [1,2], "2-3": [2,3], "0-3": [3,0]}})");
  Result cyc = RunArgs({"pfaffian", "--input", g, "--check", "--json"});
  ASSERT_EQ(cyc.code, 0) << cyc.err;
  EXPECT_EQ(json::parse(cyc.out)["pfaffian_orientation"], false);

  Result tile = RunArgs({"pfaffian", "--shape", ""});
  ASSERT_EQ(tile.code, 0) << tile.err;
  EXPECT_EQ(EvalOnes(Polynomial::Parse(tile.out)), -2);

  std::string odd = WriteTemp("snakedet_cli_odd.json",
                              R"({"matrix": [["0","1","0"],["-1","0","0"],["0","0","0"]]})");
  EXPECT_EQ(json::parse(RunArgs({"pfaffian", "--input", odd}).err)["error"],
            "OddSize");
}

TEST(CliTest, VerifyHexagon) {
  Result r = RunArgs({"verify", "--n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "all (triangulation, arc) pairs agree: 14 triangulations × 6 arcs "
            "(84 pairs)\n");
}

TEST(CliTest, OutputIsByteStable) {
  std::vector<std::string> args{"expand", "--n", "7", "--diagonals",
                                "0-2,2-4,4-6,0-4", "--arc", "1-5", "--json"};
  Result a = RunArgs(args);
  Result b = RunArgs(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(RunArgs({"snake", "orient", "--shape", "RUUR"}).out,
            RunArgs({"snake", "orient", "--shape", "RUUR"}).out);
}

TEST(CliTest, SignReport) {
  Result r = RunArgs({"sign-report", "--max-d", "4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json rows = json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2]["d"], 3);
  EXPECT_EQ(rows[2]["agrees"], true);
}

}  // namespace
}  // namespace snakedet
