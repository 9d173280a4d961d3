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

// Explicit doubly resolving sets with provable size bounds.

#ifndef DRS_CONSTRUCTIVE_H_
#define DRS_CONSTRUCTIVE_H_

#include "drs/distance.h"
#include "drs/graph.h"
#include "drs/structure.h"
#include "drs/vertex_set.h"

namespace drs {

// V minus the interior of a shortest path between a diametral pair, so
// |W| = n - diam + 1. The pair is the least (u, v) with d(u,v) = diam; the
// path is traced back from v, always stepping to the least-index neighbor
// one closer to u. Requires a connected g with n >= 2.
VertexSet ConstructDiametral(const Graph& g, const DistanceMatrix& dm);

// The leaves of a tree, its unique doubly resolving basis. Throws
// Error(kNotApplicable) when g is not a tree with n >= 2.
VertexSet ConstructTreeBasis(const Graph& g);

// Distances in the bare cycle C_m, indexed by position in `cycle.cycle`.
DistanceMatrix CycleDistances(const CycleStructure& cycle);

struct CycleBasis {
  VertexSet basis;        // doubly resolves the bare cycle; 2 or 3 vertices
  VertexSet degree_two;   // members of `basis` with degree 2 in g
};

// Among all 2-subsets (odd cycle) or 3-subsets (even cycle) of the cycle
// that doubly resolve the bare cycle, the one with fewest degree-2
// members, ties broken lexicographically. Throws Error(kNotApplicable)
// when g is itself a cycle.
CycleBasis CycleBasisPreferringBranchVertices(const Graph& g,
                                              const CycleStructure& cycle);

// L(G) together with the degree-2 members of the cycle basis above. The
// result is verified before it is returned, and has at most l(G) + 1
// (odd cycle) or l(G) + 2 (even cycle) vertices. Throws
// Error(kNotApplicable) for bare cycles and non-unicyclic graphs,
// Error(kDisconnected) for disconnected ones.
VertexSet ConstructUnicyclic(const Graph& g);

}  // namespace drs

#endif  // DRS_CONSTRUCTIVE_H_
