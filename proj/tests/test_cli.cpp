// Copyright 2026 The mixedgraph Authors
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

#include "mixedgraph/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "mixedgraph/graph.hpp"
#include "support/suites.hpp"

#ifndef MIXEDGRAPH_TEST_DATA
#error "MIXEDGRAPH_TEST_DATA must point at tests/data"
#endif

namespace mixedgraph::cli {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(MIXEDGRAPH_TEST_DATA) + "/" + name; }

TEST(Cli, MatrixJsonForSingleOrientedEdge) {
  const Outcome r = run_cli({"matrix", "--input", data("edge_d.txt"), "--kind", "Q", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"rows\":2,\"cols\":2,\"entries\":[[[1,0],[0,1]],[[0,-1],[1,0]]]}\n");
}

TEST(Cli, MatrixTextFromStdin) {
  const Outcome r = run_cli({"matrix", "--kind", "H"}, "0 1 U\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0 1\n1 0\n");
}

TEST(Cli, MinorReportsBothValues) {
  const Outcome r = run_cli({"minor", "--input", data("k3u.txt"), "--rows", "0,1", "--cols", "0,1", "--matrix", "L",
                             "--method", "both", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["direct"], nlohmann::json::parse("[3,0]"));
  EXPECT_EQ(j["combinatorial"], nlohmann::json::parse("[3,0]"));
  EXPECT_EQ(j["terms"].size(), 3u);
}

TEST(Cli, NonprincipalMinorLogsLiteralPhase) {
  const Outcome r = run_cli({"minor", "--input", data("edge_d.txt"), "--rows", "0", "--cols", "1", "--matrix", "Q",
                             "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["direct"], nlohmann::json::parse("[0,1]"));
  EXPECT_EQ(j["literal_sum"], nlohmann::json::parse("[0,-1]"));
}

TEST(Cli, VerifyDirectedFourCycle) {
  const Outcome r = run_cli({"verify", "--input", data("c4d.txt"), "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["quapartite"].get<bool>());
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, VerifyPassesOnSmallRandomGraphs) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 30; ++k) {
    const MixedGraph g = testing::random_graph(rng, 2 + rng() % 5, 0.6);
    const VerifyResult res = verify_graph(g);
    EXPECT_TRUE(res.ok) << format_graph(g) << res.report.dump(2);
  }
}

TEST(Cli, OtherSubcommands) {
  Outcome r = run_cli({"cycles", "--input", data("mixed_triangle.txt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0 1 2  a=2 b=0 c=1 typeS=III typeT=IV\n");
  r = run_cli({"spanning-trees", "--input", data("k3u.txt")});
  EXPECT_EQ(r.out, "3\n");
  r = run_cli({"quapartite", "--input", data("c3d.txt"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["partition"], "none");
  r = run_cli({"quapartite", "--input", data("c4d.txt"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["partition"], nlohmann::json::parse(R"({"0":1,"1":2,"2":3,"3":4})"));
  r = run_cli({"sss", "--input", data("k3u.txt"), "--verts", "0,1", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["substructures"].size(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"matrix", "--kind", "X"}, "0 1 U\n").code, kExitUsage);
  EXPECT_EQ(run_cli({"minor", "--rows", "0", "--cols", "0,1"}, "0 1 U\n").code, kExitUsage);
  EXPECT_EQ(run_cli({"minor", "--rows", "7", "--cols", "0"}, "0 1 U\n").code, kExitUsage);
  EXPECT_EQ(run_cli({"matrix", "--input", data("no_such_file.txt")}).code, kExitUsage);
  const Outcome bad = run_cli({"cycles"}, "0 1 U\n1 2 Z\n");
  EXPECT_EQ(bad.code, kExitParse);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"verify", "--input", data("mixed_triangle.txt"), "--format", "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

}  // namespace
}  // namespace mixedgraph::cli
