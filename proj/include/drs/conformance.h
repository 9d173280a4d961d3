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

// Randomized conformance runner. Each case draws a graph from a seeded
// generator mix (random connected, random tree, random unicyclic, named
// family), and every registered property is checked against it. A failing
// case is shrunk by deleting vertices and edges while it keeps failing.

#ifndef DRS_CONFORMANCE_H_
#define DRS_CONFORMANCE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drs/distance.h"
#include "drs/graph.h"
#include "drs/solver.h"
#include "drs/structure.h"

namespace drs::conformance {

// What a property needs beyond the graph itself.
enum class Requirement {
  kNone,    // distances and constructions only
  kSolver,  // psi from SolvePsi
  kOracle,  // the brute-force oracle
};

// Everything computed once per case and shared by all properties.
struct CaseData {
  Graph graph;
  DistanceMatrix distances;
  TwinPartition twins;
  std::optional<SolveResult> solved;  // set when a property needs it
};

CaseData Prepare(const Graph& g, bool with_solver);

struct Property {
  std::string name;
  Requirement requirement = Requirement::kNone;
  // False when the property says nothing about this graph (e.g. a tree
  // property on a graph with cycles).
  std::function<bool(const CaseData&)> applies;
  // nullopt on success, otherwise a description of the violation.
  std::function<std::optional<std::string>(const CaseData&)> check;
};

// The standard checks: size bounds, leaf and
// twin forcing, twin swap, closed forms, the n-1 characterization, tree
// basis uniqueness, the unicyclic sandwich and oracle agreement.
std::vector<Property> StandardProperties();

struct Options {
  std::uint64_t seed = 1;
  int count = 100;
  int max_n = 8;
  int solver_cap = kDefaultSolverCap;
};

enum class Status { kPass, kFail, kSkipped };
const char* StatusName(Status s);

struct Counterexample {
  int case_index = 0;
  std::string edge_list;  // shrunk graph, SerializeEdgeList format
  std::string detail;
};

struct PropertyOutcome {
  std::string name;
  Status status = Status::kPass;
  int checked = 0;  // cases where the property applied
  int passed = 0;
  std::string skip_reason;
  std::optional<Counterexample> counterexample;
};

struct Report {
  Options options;
  int cases = 0;
  std::vector<PropertyOutcome> properties;

  bool AllPassed() const;
};

// Deterministic in (seed, index, max_n). Order is drawn from 3..max_n.
Graph CaseGraph(std::uint64_t seed, int index, int max_n);

// Throws Error(kInvalidArgument) for count < 0 or max_n < 3. Properties
// whose requirement exceeds what max_n allows are reported as skipped.
Report Run(const Options& options,
           const std::vector<Property>& properties = StandardProperties());

// Greedy shrink: repeatedly drop a vertex or an edge while the result stays
// connected and `fails` still holds.
Graph Shrink(const Graph& g, const std::function<bool(const Graph&)>& fails);

}  // namespace drs::conformance

#endif  // DRS_CONFORMANCE_H_
