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

#include "drs/resolve.h"

#include <algorithm>
#include <string>

#include "drs/error.h"

namespace drs {
namespace {

void CheckIndex(const DistanceMatrix& dm, Vertex v) {
  if (v < 0 || v >= dm.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " outside 0.." +
                    std::to_string(dm.order() - 1));
  }
}

void CheckSet(const DistanceMatrix& dm, const VertexSet& w) {
  if (w.universe() != dm.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex set belongs to a graph of order " +
                    std::to_string(w.universe()) + ", not " +
                    std::to_string(dm.order()));
  }
}

}  // namespace

bool DoublyResolves(const DistanceMatrix& dm, Vertex u, Vertex v, Vertex x,
                    Vertex y) {
  for (Vertex a : {u, v, x, y}) CheckIndex(dm, a);
  if (u == v || x == y) {
    throw Error(ErrorCode::kInvalidArgument,
                "doubly resolving needs distinct u, v and distinct x, y");
  }
  return dm(u, x) - dm(v, x) != dm(u, y) - dm(v, y);
}

std::optional<int> ConstantDifference(const DistanceMatrix& dm, Vertex u,
                                      Vertex v, const VertexSet& w) {
  const std::int32_t* du = dm.row(u);
  const std::int32_t* dv = dm.row(v);
  const int first = du[w[0]] - dv[w[0]];
  for (Vertex x : w) {
    if (du[x] - dv[x] != first) return std::nullopt;
  }
  return first;
}

Verdict CheckDoublyResolving(const DistanceMatrix& dm, const VertexSet& w) {
  CheckSet(dm, w);
  if (w.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "a doubly resolving set needs at least two vertices");
  }
  const int n = dm.order();
  std::vector<char> in_w(n, 0);
  for (Vertex x : w) in_w[x] = 1;

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (in_w[u] && in_w[v]) continue;
      if (auto c = ConstantDifference(dm, u, v, w)) {
        return {.doubly_resolving = false,
                .witness = FailureWitness{u, v, *c}};
      }
    }
  }
  return {.doubly_resolving = true, .witness = std::nullopt};
}

bool IsDoublyResolvingSet(const DistanceMatrix& dm, const VertexSet& w) {
  return CheckDoublyResolving(dm, w).doubly_resolving;
}

MetricRepresentation Representation(const DistanceMatrix& dm, Vertex v,
                                    const VertexSet& w) {
  CheckSet(dm, w);
  CheckIndex(dm, v);
  if (w.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "metric representation needs a non-empty set");
  }
  MetricRepresentation r;
  r.reserve(w.size());
  for (Vertex x : w) r.push_back(dm(v, x));
  return r;
}

bool IsResolvingSet(const DistanceMatrix& dm, const VertexSet& w) {
  std::vector<MetricRepresentation> reps;
  reps.reserve(dm.order());
  for (Vertex v = 0; v < dm.order(); ++v) {
    reps.push_back(Representation(dm, v, w));
  }
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

}  // namespace drs
