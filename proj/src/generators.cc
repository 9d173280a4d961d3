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

#include "drs/generators.h"

#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "drs/error.h"
#include "drs/structure.h"

namespace drs {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

}  // namespace

int UniformInt(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph PathGraph(int n) {
  Require(n >= 1, "path order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::FromEdges(n, edges);
}

Graph CycleGraph(int n) {
  Require(n >= 3, "cycle order must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::FromEdges(n, edges);
}

Graph CompleteGraph(int n) {
  Require(n >= 1, "complete graph order must be at least 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

Graph CompleteBipartiteGraph(int r, int s) {
  Require(r >= 1 && s >= 1, "complete bipartite parts must be non-empty");
  std::vector<Edge> edges;
  for (Vertex x = 0; x < r; ++x) {
    for (Vertex y = r; y < r + s; ++y) edges.emplace_back(x, y);
  }
  return Graph::FromEdges(r + s, edges);
}

Graph StarGraph(int n) {
  Require(n >= 2, "star order must be at least 2");
  return CompleteBipartiteGraph(1, n - 1);
}

Graph JoinK2EmptyGraph(int m) {
  Require(m >= 1, "independent part of the join must be non-empty");
  std::vector<Edge> edges = {{0, 1}};
  for (Vertex y = 2; y < m + 2; ++y) {
    edges.emplace_back(0, y);
    edges.emplace_back(1, y);
  }
  return Graph::FromEdges(m + 2, edges);
}

Graph Generate(const FamilyDescriptor& family) {
  family.Validate();
  switch (family.kind) {
    case FamilyKind::kPath:
      return PathGraph(family.n);
    case FamilyKind::kCycle:
      return CycleGraph(family.n);
    case FamilyKind::kComplete:
      return CompleteGraph(family.n);
    case FamilyKind::kCompleteBipartite:
      return CompleteBipartiteGraph(family.r, family.s);
    case FamilyKind::kStar:
      return StarGraph(family.n);
    case FamilyKind::kJoinK2Empty:
      return JoinK2EmptyGraph(family.m);
    case FamilyKind::kTree:
    case FamilyKind::kUnicyclic:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              family.ToString() + " does not determine a single graph");
}

Graph RandomTree(int n, Rng& rng) {
  Require(n >= 1, "tree order must be at least 1");
  if (n == 1) return Graph(1);
  if (n == 2) return PathGraph(2);

  std::vector<Vertex> pruefer(n - 2);
  for (auto& x : pruefer) x = UniformInt(rng, 0, n - 1);

  std::vector<int> degree(n, 1);
  for (Vertex x : pruefer) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex x : pruefer) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::FromEdges(n, edges);
}

Graph RandomUnicyclic(int n, Rng& rng) {
  Require(n >= 3, "unicyclic order must be at least 3");
  const Graph tree = RandomTree(n, rng);
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) non_edges.emplace_back(u, v);
    }
  }
  std::vector<Edge> edges = tree.edges();
  edges.push_back(
      non_edges[UniformInt(rng, 0, static_cast<int>(non_edges.size()) - 1)]);
  return Graph::FromEdges(n, edges);
}

Graph RandomConnected(int n, double p, Rng& rng) {
  Require(n >= 1, "graph order must be at least 1");
  Require(p > 0.0 && p <= 1.0, "edge probability must be in (0, 1]");
  while (true) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (UniformUnit(rng) < p) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::FromEdges(n, edges);
    if (IsConnected(g)) return g;
  }
}

}  // namespace drs
