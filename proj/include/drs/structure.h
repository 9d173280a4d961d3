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

// Structural queries on graphs: connectivity, leaves, twin classes and the
// cycle decomposition of unicyclic graphs.

#ifndef DRS_STRUCTURE_H_
#define DRS_STRUCTURE_H_

#include <map>
#include <vector>

#include "drs/graph.h"
#include "drs/vertex_set.h"

namespace drs {

bool IsConnected(const Graph& g);
bool IsTree(const Graph& g);
// Connected with exactly one cycle, i.e. |E| == n.
bool IsUnicyclic(const Graph& g);

// Degree-1 vertices.
VertexSet Leaves(const Graph& g);

// u, v are twins when N(u) \ {v} == N(v) \ {u}. Non-adjacent twins have
// equal open neighborhoods, adjacent twins equal closed neighborhoods; each
// of those relations is an equivalence, so classes are formed per kind.
enum class TwinKind { kOpen, kClosed };

struct TwinClass {
  TwinKind kind;
  std::vector<Vertex> members;  // ascending, size >= 2
};

struct TwinPartition {
  // Ordered by smallest member.
  std::vector<TwinClass> classes;
  // Twin pairs that ended up in no common class. Always empty for simple
  // graphs; kept so a violation would surface instead of being dropped.
  std::vector<Edge> mixed_pairs;

  // Index into `classes` of the class containing v, or -1.
  int ClassOf(Vertex v) const;
};

bool AreTwins(const Graph& g, Vertex u, Vertex v);
TwinPartition ComputeTwinPartition(const Graph& g);

// The unique cycle of a unicyclic graph and the trees hanging off it.
struct CycleStructure {
  std::vector<Vertex> cycle;  // v_1..v_m, consecutive entries adjacent
  // Cycle vertex x of degree >= 3 -> V(x), the non-cycle vertices whose
  // nearest cycle vertex is x. Values ascending.
  std::map<Vertex, std::vector<Vertex>> attachments;

  int length() const { return static_cast<int>(cycle.size()); }
  bool OnCycle(Vertex v) const;
};

// Throws Error(kDisconnected) or Error(kNotApplicable) when g is not a
// connected unicyclic graph.
CycleStructure FindCycle(const Graph& g);

}  // namespace drs

#endif  // DRS_STRUCTURE_H_
