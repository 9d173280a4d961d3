// Copyright 2026 The drs Authors
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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace drs::cli {
namespace {

using nlohmann::json;

std::string WriteGraph(const std::string& name, const std::string& text) {
  const std::string path = std::string(DRS_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;

  json Report() const { return json::parse(out); }
};

Invocation Call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = Run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Cycle(int n) {
  std::string text = "# cycle\n";
  for (int i = 0; i < n; ++i) {
    text += std::to_string(i) + " " + std::to_string((i + 1) % n) + "\n";
  }
  return text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("DRS_CAP"); }
  void TearDown() override { unsetenv("DRS_CAP"); }
};

TEST_F(CliTest, PsiOfOddCycle) {
  const Invocation r = Call({"psi", WriteGraph("c9.txt", Cycle(9))});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = r.Report();
  EXPECT_EQ(report["schema"], 1);
  EXPECT_EQ(report["command"], "psi");
  EXPECT_EQ(report["input"]["n"], 9);
  EXPECT_EQ(report["input"]["diameter"], 4);
  EXPECT_EQ(report["result"]["psi"], 2);
  EXPECT_EQ(report["result"]["witness"].size(), 2u);
  EXPECT_EQ(report["result"]["certificate"], "bound");
}

TEST_F(CliTest, PsiOfStar) {
  const Invocation r = Call({"psi", WriteGraph("k13.txt", "0 1\n0 2\n0 3\n")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.Report()["result"]["psi"], 3);
  EXPECT_EQ(r.Report()["result"]["witness"], json({1, 2, 3}));
}

TEST_F(CliTest, PsiErrors) {
  EXPECT_EQ(Call({"psi", WriteGraph("k1.txt", "n 1\n")}).code, kExitUsage);
  const Invocation disconnected =
      Call({"psi", WriteGraph("2k2.txt", "0 1\n2 3\n")});
  EXPECT_EQ(disconnected.code, kExitDisconnected);
  EXPECT_NE(disconnected.err.find("disconnected"), std::string::npos);
  EXPECT_EQ(Call({"psi", WriteGraph("loop.txt", "0 0\n")}).code, kExitUsage);
  EXPECT_EQ(Call({"psi", std::string(DRS_TEST_TMPDIR) + "/missing.txt"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"psi"}).code, kExitUsage);
  EXPECT_EQ(Call({"bogus"}).code, kExitUsage);
}

TEST_F(CliTest, CapFromFlagAndEnvironment) {
  const std::string c9 = WriteGraph("c9cap.txt", Cycle(9));
  EXPECT_EQ(Call({"psi", c9, "--cap", "8"}).code, kExitOverCap);
  EXPECT_EQ(Call({"psi", c9, "--cap", "9"}).code, kExitOk);
  setenv("DRS_CAP", "5", 1);
  EXPECT_EQ(Call({"psi", c9}).code, kExitOverCap);
  EXPECT_EQ(Call({"psi", c9, "--cap", "20"}).code, kExitOk);
  setenv("DRS_CAP", "lots", 1);
  EXPECT_EQ(Call({"psi", c9}).code, kExitUsage);
}

TEST_F(CliTest, Verify) {
  const std::string tree = WriteGraph("tree.txt", "0 1\n1 2\n1 3\n3 4\n");
  const Invocation leaves = Call({"verify", tree, "--set", "0,2,4"});
  ASSERT_EQ(leaves.code, kExitOk) << leaves.err;
  EXPECT_EQ(leaves.Report()["result"]["doubly_resolving"], true);

  const std::string c4 = WriteGraph("c4.txt", Cycle(4));
  const Invocation bad = Call({"verify", c4, "--set", "0,2"});
  EXPECT_EQ(bad.code, kExitNotResolving);
  const json result = bad.Report()["result"];
  EXPECT_EQ(result["doubly_resolving"], false);
  EXPECT_EQ(result["witness"]["u"], 1);
  EXPECT_EQ(result["witness"]["v"], 3);

  EXPECT_EQ(Call({"verify", c4, "--set", "0,9"}).code, kExitUsage);
  EXPECT_EQ(Call({"verify", c4, "--set", "0,x"}).code, kExitUsage);
  EXPECT_EQ(Call({"verify", c4, "--set", "0"}).code, kExitUsage);
}

TEST_F(CliTest, Construct) {
  const std::string p6 =
      WriteGraph("p6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n");
  const Invocation diametral = Call({"construct", p6, "--method", "diametral"});
  ASSERT_EQ(diametral.code, kExitOk) << diametral.err;
  EXPECT_EQ(diametral.Report()["result"]["set"], json({0, 5}));
  EXPECT_EQ(diametral.Report()["result"]["verified"], true);

  const std::string paw = WriteGraph("paw.txt", "0 1\n1 2\n0 2\n0 3\n");
  const Invocation unicyclic = Call({"construct", paw, "--method", "unicyclic"});
  ASSERT_EQ(unicyclic.code, kExitOk) << unicyclic.err;
  EXPECT_EQ(unicyclic.Report()["result"]["set"], json({1, 3}));
  EXPECT_EQ(unicyclic.Report()["result"]["bound"]["value"], 2);

  const std::string c6 = WriteGraph("c6.json",
      R"({"n": 6, "edges": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]})");
  EXPECT_EQ(Call({"construct", c6, "--method", "unicyclic"}).code,
            kExitNotApplicable);
  EXPECT_EQ(Call({"construct", c6, "--method", "tree"}).code,
            kExitNotApplicable);
  EXPECT_EQ(Call({"construct", c6, "--method", "magic"}).code, kExitUsage);
}

TEST_F(CliTest, FamilyAndClassify) {
  const std::string k23 =
      WriteGraph("k23.txt", "0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  const Invocation family = Call({"family", k23});
  ASSERT_EQ(family.code, kExitOk) << family.err;
  const json families = family.Report()["result"]["families"];
  ASSERT_EQ(families.size(), 1u);
  EXPECT_EQ(families[0]["family"], "CompleteBipartite(2,3)");
  EXPECT_EQ(families[0]["psi"], 4);

  const Invocation yes = Call({"classify-n1", k23});
  EXPECT_EQ(yes.Report()["result"]["psi_equals_n_minus_1"], true);
  EXPECT_EQ(yes.Report()["result"]["family"], "CompleteBipartite(2,3)");
  const Invocation no = Call({"classify-n1", WriteGraph("c5.txt", Cycle(5))});
  EXPECT_EQ(no.Report()["result"]["psi_equals_n_minus_1"], false);
  EXPECT_TRUE(no.Report()["result"]["family"].is_null());
}

TEST_F(CliTest, Conformance) {
  const Invocation r =
      Call({"conformance", "--seed", "2", "--count", "20", "--max-n", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.Report()["result"]["all_passed"], true);
  EXPECT_EQ(r.Report()["arguments"]["seed"], 2);
  EXPECT_EQ(Call({"conformance", "--max-n", "2"}).code, kExitUsage);
}

TEST_F(CliTest, TextFormat) {
  const Invocation r =
      Call({"--format", "text", "psi", WriteGraph("c5t.txt", Cycle(5))});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("result.psi: 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("schema: 1\n"), std::string::npos);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  const std::string g = WriteGraph("det.txt", "0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n");
  for (const std::string& cmd : {"psi", "family", "classify-n1"}) {
    EXPECT_EQ(Call({cmd, g}).out, Call({cmd, g}).out) << cmd;
  }
  const std::vector<std::string> conf = {"conformance", "--count", "15"};
  EXPECT_EQ(Call(conf).out, Call(conf).out);
  const json timed = Call({"--timing", "psi", g}).Report();
  EXPECT_TRUE(timed.contains("elapsed_ms"));
  EXPECT_FALSE(Call({"psi", g}).Report().contains("elapsed_ms"));
}

}  // namespace
}  // namespace drs::cli
