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

#include "drs/conformance.h"

#include <string>
#include <vector>

#include "drs/error.h"
#include "drs/generators.h"
#include "drs/graph_io.h"
#include "gtest/gtest.h"

namespace drs::conformance {
namespace {

bool HasTriangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    for (Vertex w : g.neighbors(u)) {
      if (w != v && g.adjacent(v, w)) return true;
    }
  }
  return false;
}

TEST(ConformanceTest, StandardPropertiesPass) {
  const Report report = conformance::Run({.seed = 1, .count = 100, .max_n = 8});
  EXPECT_TRUE(report.AllPassed());
  EXPECT_EQ(report.cases, 100);
  for (const PropertyOutcome& p : report.properties) {
    EXPECT_EQ(p.status, Status::kPass) << p.name;
    EXPECT_EQ(p.checked, p.passed) << p.name;
    EXPECT_FALSE(p.counterexample.has_value()) << p.name;
  }
}

TEST(ConformanceTest, EveryPropertyIsExercised) {
  const Report report = conformance::Run({.seed = 5, .count = 200, .max_n = 9});
  for (const PropertyOutcome& p : report.properties) {
    EXPECT_GT(p.checked, 0) << p.name;
  }
}

TEST(ConformanceTest, ZeroCasesPassVacuously) {
  const Report report = conformance::Run({.seed = 1, .count = 0, .max_n = 8});
  EXPECT_TRUE(report.AllPassed());
  for (const PropertyOutcome& p : report.properties) {
    EXPECT_EQ(p.checked, 0);
  }
}

TEST(ConformanceTest, LargeOrdersSkipExactProperties) {
  const Report report = conformance::Run({.seed = 3, .count = 10, .max_n = 30});
  EXPECT_TRUE(report.AllPassed());
  int skipped = 0;
  for (const PropertyOutcome& p : report.properties) {
    if (p.status == Status::kSkipped) {
      ++skipped;
      EXPECT_FALSE(p.skip_reason.empty());
      EXPECT_EQ(p.checked, 0);
    }
    if (p.name == "diametral-construction") {
      EXPECT_EQ(p.status, Status::kPass);
      EXPECT_EQ(p.checked, 10);
    }
  }
  EXPECT_GT(skipped, 0);
}

TEST(ConformanceTest, CasesAreDeterministic) {
  for (int i = 0; i < 20; ++i) {
    const Graph a = CaseGraph(9, i, 10);
    EXPECT_EQ(a, CaseGraph(9, i, 10));
    EXPECT_GE(a.order(), 3);
    EXPECT_LE(a.order(), 10);
    EXPECT_TRUE(IsConnected(a));
  }
  const Report a = conformance::Run({.seed = 4, .count = 30, .max_n = 8});
  const Report b = conformance::Run({.seed = 4, .count = 30, .max_n = 8});
  ASSERT_EQ(a.properties.size(), b.properties.size());
  for (size_t i = 0; i < a.properties.size(); ++i) {
    EXPECT_EQ(a.properties[i].checked, b.properties[i].checked);
  }
}

TEST(ConformanceTest, RejectsBadOptions) {
  EXPECT_THROW(conformance::Run({.count = -1}), Error);
  EXPECT_THROW(conformance::Run({.max_n = 2}), Error);
}

TEST(ConformanceTest, FailureIsShrunk) {
  Property no_triangle{
      .name = "no-triangle",
      .requirement = Requirement::kNone,
      .applies = [](const CaseData&) { return true; },
      .check = [](const CaseData& d) -> std::optional<std::string> {
        if (HasTriangle(d.graph)) return "triangle";
        return std::nullopt;
      }};
  const Report report = conformance::Run({.seed = 1, .count = 50, .max_n = 8}, {no_triangle});
  ASSERT_EQ(report.properties.size(), 1u);
  const PropertyOutcome& p = report.properties[0];
  EXPECT_FALSE(report.AllPassed());
  EXPECT_EQ(p.status, Status::kFail);
  EXPECT_LT(p.passed, p.checked);
  ASSERT_TRUE(p.counterexample.has_value());
  EXPECT_EQ(p.counterexample->detail, "triangle");
  EXPECT_EQ(ParseEdgeList(p.counterexample->edge_list), CompleteGraph(3));
}

TEST(ShrinkTest, KeepsConnectivity) {
  const Graph g = CycleGraph(7);
  const Graph small = Shrink(g, [](const Graph& h) { return h.order() >= 4; });
  EXPECT_EQ(small.order(), 4);
  EXPECT_TRUE(IsConnected(small));
  EXPECT_EQ(small.size(), 3);
}

}  // namespace
}  // namespace drs::conformance
