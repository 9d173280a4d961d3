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

// Doubly resolving and resolving set predicates.
//
// Vertices u, v are doubly resolved by x, y when
//   d(u,x) - d(v,x) != d(u,y) - d(v,y).
// W is doubly resolving when every pair of distinct vertices is doubly
// resolved by some two members of W. Equivalently, for every pair the map
// w -> d(u,w) - d(v,w) is not constant on W; the verifier below checks it in
// that form, one pass over W per pair.

#ifndef DRS_RESOLVE_H_
#define DRS_RESOLVE_H_

#include <optional>
#include <vector>

#include "drs/distance.h"
#include "drs/graph.h"
#include "drs/vertex_set.h"

namespace drs {

// Throws Error(kInvalidArgument) on an out-of-range index, u == v or
// x == y.
bool DoublyResolves(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x,
                    Vertex y);

// A pair of vertices no two members of W separate: d(u,w) - d(v,w) equals
// `difference` for every w in W.
struct FailureWitness {
  Vertex u;
  Vertex v;
  int difference;
};

// The constant value of w -> d(u,w) - d(v,w) over W, or nullopt when the
// map takes two values (the pair is doubly resolved by W).
std::optional<int> ConstantDifference(const DistanceMatrix& dm, Vertex u,
                                      Vertex v, const VertexSet& w);

struct Verdict {
  bool doubly_resolving = false;
  // Lexicographically least unresolved pair (u < v) when not resolving.
  std::optional<FailureWitness> witness;
};

// Pairs with both endpoints in W are skipped: x, y in W are always doubly
// resolved by x and y themselves. Throws Error(kInvalidArgument) when
// |W| < 2 or W does not belong to the graph of `dm`.
Verdict CheckDoublyResolving(const DistanceMatrix& dm, const VertexSet& w);
bool IsDoublyResolvingSet(const DistanceMatrix& dm, const VertexSet& w);

// r(v|W) = (d(v,w_1), ..., d(v,w_k)) in the ascending order of W.
using MetricRepresentation = std::vector<int>;

// Throws Error(kInvalidArgument) on an empty W.
MetricRepresentation Representation(const DistanceMatrix& dm, Vertex v,
                                    const VertexSet& w);

// True iff all representations r(v|W) are pairwise distinct.
bool IsResolvingSet(const DistanceMatrix& dm, const VertexSet& w);

}  // namespace drs

#endif  // DRS_RESOLVE_H_
