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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "corpus.h"
#include "drs/constructive.h"
#include "drs/distance.h"
#include "drs/families.h"
#include "drs/generators.h"
#include "drs/graph_io.h"
#include "drs/oracle.h"
#include "drs/resolve.h"
#include "drs/solver.h"
#include "drs/structure.h"

namespace drs {
namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few failure messages of one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) std::fprintf(stderr, "  failure: %s\n", what.c_str());
  }
  int checks() const { return checks_; }
  int failures() const { return failures_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
};

std::string Describe(const Graph& g) {
  std::string text = SerializeEdgeList(g);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

std::vector<Graph> SmallCorpus() {
  std::vector<Graph> out;
  for (int n = 2; n <= 7; ++n) {
    for (Graph& g : testing::ConnectedGraphs(n)) out.push_back(std::move(g));
  }
  return out;
}

bool ClosedForms(Checker& c) {
  auto expect = [&](const Graph& g, int psi, const std::string& name) {
    const int got = SolvePsi(g).psi;
    c.Expect(got == psi, name + ": psi " + std::to_string(got) +
                             ", expected " + std::to_string(psi));
  };
  for (int n = 2; n <= 8; ++n) {
    expect(CompleteGraph(n), std::max(n - 1, 2), "K" + std::to_string(n));
  }
  for (int n = 2; n <= 10; ++n) expect(PathGraph(n), 2, "P" + std::to_string(n));
  for (int n = 3; n <= 10; ++n) {
    expect(CycleGraph(n), n % 2 == 1 ? 2 : 3, "C" + std::to_string(n));
  }
  for (int r = 1; r <= 5; ++r) {
    for (int s = r; s <= 5; ++s) {
      const int n = r + s;
      if (n < 3) continue;
      expect(CompleteBipartiteGraph(r, s), r <= 2 ? n - 1 : n - 2,
             "K" + std::to_string(r) + "," + std::to_string(s));
    }
  }
  for (int m = 1; m <= 5; ++m) {
    expect(JoinK2EmptyGraph(m), m + 1, "K2+E" + std::to_string(m));
  }
  return true;
}

bool Characterization(Checker& c) {
  auto check = [&](const Graph& g) {
    const int n = g.order();
    const bool extremal = SolvePsi(g).psi == n - 1;
    const bool classified = ClassifyNMinus1(g).has_value();
    c.Expect(extremal == classified, "mismatch on " + Describe(g));
  };
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : testing::ConnectedGraphs(n)) check(g);
  }
  for (const Graph& g : testing::RandomConnectedGraphs(7, 500, 17)) check(g);
  return true;
}

bool Bounds(Checker& c) {
  std::vector<Graph> graphs = SmallCorpus();
  for (int n = 8; n <= 10; ++n) {
    for (Graph& g : testing::RandomConnectedGraphs(n, 100, 100 + n)) {
      graphs.push_back(std::move(g));
    }
  }
  for (const Graph& g : graphs) {
    const int n = g.order();
    const DistanceMatrix dm = AllPairsShortestPaths(g);
    const int d = dm.diameter();
    const int psi = SolvePsi(g).psi;
    if (n >= 3) {
      c.Expect(2 <= psi && psi <= n - 1, "psi out of [2, n-1] on " + Describe(g));
    }
    c.Expect(psi <= n - d + 1, "psi above n-diam+1 on " + Describe(g));
    const VertexSet w = ConstructDiametral(g, dm);
    c.Expect(w.size() == n - d + 1, "diametral size on " + Describe(g));
    c.Expect(IsDoublyResolvingSet(dm, w), "diametral invalid on " + Describe(g));
  }
  return true;
}

bool Trees(Checker& c) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Graph t = RandomTree(UniformInt(rng, 3, 10), rng);
    const std::vector<VertexSet> minimum = oracle::AllMinimumSets(t);
    c.Expect(minimum.size() == 1 && minimum.front() == Leaves(t),
             "minimum sets are not exactly the leaves on " + Describe(t));
  }
  return true;
}

bool Unicyclic(Checker& c) {
  Rng rng(47);
  int done = 0;
  while (done < 300) {
    const Graph g = RandomUnicyclic(UniformInt(rng, 4, 12), rng);
    const CycleStructure cycle = FindCycle(g);
    if (cycle.length() == g.order()) continue;
    ++done;
    const int l = Leaves(g).size();
    const int hi = l + (cycle.length() % 2 == 1 ? 1 : 2);
    const int psi = SolvePsi(g).psi;
    c.Expect(l <= psi && psi <= hi, "psi outside sandwich on " + Describe(g));
    const VertexSet w = ConstructUnicyclic(g);
    c.Expect(IsDoublyResolvingSet(AllPairsShortestPaths(g), w) &&
                 w.size() <= hi,
             "construction invalid or too large on " + Describe(g));
    if (CycleBasisPreferringBranchVertices(g, cycle).degree_two.empty()) {
      c.Expect(psi == l, "U empty but psi != l on " + Describe(g));
    }
  }
  return true;
}

bool OracleAgreement(Checker& c) {
  std::vector<Graph> graphs = SmallCorpus();
  for (Graph& g : testing::RandomConnectedGraphs(8, 300, 8)) {
    graphs.push_back(std::move(g));
  }
  for (int n = 9; n <= 10; ++n) {
    for (Graph& g : testing::RandomConnectedGraphs(n, 100, 900 + n)) {
      graphs.push_back(std::move(g));
    }
  }
  for (const Graph& g : graphs) {
    const SolveResult fast = SolvePsi(g);
    const SolveResult brute = oracle::BruteForcePsi(g);
    c.Expect(fast.psi == brute.psi && fast.witness == brute.witness,
             "solver and oracle disagree on " + Describe(g));
  }
  return true;
}

bool Twins(Checker& c) {
  std::vector<Graph> graphs = SmallCorpus();
  for (Graph& g : testing::RandomConnectedGraphs(9, 100, 99)) {
    graphs.push_back(std::move(g));
  }
  int with_twins = 0;
  for (const Graph& g : graphs) {
    const TwinPartition twins = ComputeTwinPartition(g);
    if (twins.classes.empty()) continue;
    ++with_twins;
    const auto dist = oracle::FloydWarshall(g);
    for (const VertexSet& w : oracle::AllMinimumSets(g)) {
      for (const TwinClass& cls : twins.classes) {
        for (size_t i = 0; i < cls.members.size(); ++i) {
          for (size_t j = i + 1; j < cls.members.size(); ++j) {
            const Vertex u = cls.members[i];
            const Vertex v = cls.members[j];
            c.Expect(w.contains(u) || w.contains(v),
                     "minimum set omits twins on " + Describe(g));
            if (w.contains(u) != w.contains(v)) {
              const Vertex in = w.contains(u) ? u : v;
              const Vertex out = in == u ? v : u;
              c.Expect(oracle::LiteralDoublyResolving(
                           dist, w.Without(in).With(out)),
                       "twin swap breaks a set on " + Describe(g));
            }
          }
        }
      }
    }
  }
  c.Expect(with_twins > 0, "no graph with twins");
  return true;
}

struct Criterion {
  const char* title;
  std::function<bool(Checker&)> run;
  double limit_seconds;  // 0 for none
};

int Main() {
  const std::vector<Criterion> criteria = {
      {"closed forms for named families", ClosedForms, 60},
      {"psi = n - 1 characterization", Characterization, 600},
      {"psi bounds and diametral construction", Bounds, 0},
      {"tree leaves are the unique basis", Trees, 0},
      {"unicyclic sandwich and construction", Unicyclic, 0},
      {"solver agrees with brute-force oracle", OracleAgreement, 0},
      {"twin forcing and swap", Twins, 0},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& cr = criteria[i];
    Checker c;
    const auto start = Clock::now();
    bool ok = true;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  exception: %s\n", e.what());
      ok = false;
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    ok = ok && c.failures() == 0 && c.checks() > 0;
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) ok = false;
    if (!ok) ++failed;
    std::printf("[%s] criterion %zu: %s (%d checks, %d failures, %.2fs)\n",
                ok ? "PASS" : "FAIL", i + 1, cr.title, c.checks(),
                c.failures(), secs);
    std::fflush(stdout);
  }
  std::printf("%s: %zu of %zu criteria passed\n", failed ? "FAILED" : "OK",
              criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace drs

int main() { return drs::Main(); }
