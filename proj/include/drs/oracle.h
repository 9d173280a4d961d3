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

// Reference implementation of psi(G) for cross-checking the solver.
//
// Nothing here shares code with the solver or the fast verifier: distances
// come from Floyd-Warshall, the predicate quantifies over every witness pair
// (x, y) in W exactly as in the definition, and subsets are enumerated as
// bitmasks with no pruning.

#ifndef DRS_ORACLE_H_
#define DRS_ORACLE_H_

#include <vector>

#include "drs/graph.h"
#include "drs/solver.h"
#include "drs/vertex_set.h"

namespace drs::oracle {

inline constexpr int kOracleCap = 10;

// n x n distances by Floyd-Warshall; unreachable pairs are left at n.
std::vector<std::vector<int>> FloydWarshall(const Graph& g);

// For every u != v there exist x, y in W with
// d(v,x) - d(u,x) != d(v,y) - d(u,y).
bool LiteralDoublyResolving(const std::vector<std::vector<int>>& dist,
                            const VertexSet& w);

// psi and the lexicographically least minimum set. Bounds in the result are
// left at their defaults; the certificate is always kExhaustion. Throws like
// SolvePsi with cap 10.
SolveResult BruteForcePsi(const Graph& g);

// Every doubly resolving set of size psi(G), ascending.
std::vector<VertexSet> AllMinimumSets(const Graph& g);

}  // namespace drs::oracle

#endif  // DRS_ORACLE_H_
