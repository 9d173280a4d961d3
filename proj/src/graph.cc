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

#include "drs/graph.h"

#include <algorithm>
#include <string>

#include "drs/error.h"

namespace drs {

Graph::Graph(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "graph order must be at least 1, got " + std::to_string(n));
  }
  adjacency_.resize(n);
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (!g.contains(u) || !g.contains(v)) {
      throw Error(ErrorCode::kParse,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) +
                      " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::kParse,
                  "self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      throw Error(ErrorCode::kParse, "duplicate edge " + std::to_string(
                                         std::min(v, *dup)) +
                                         "-" + std::to_string(std::max(v, *dup)));
    }
  }
  g.num_edges_ = static_cast<int>(edges.size());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::WithoutVertex(Vertex v) const {
  std::vector<Edge> kept;
  for (auto [a, b] : edges()) {
    if (a == v || b == v) continue;
    kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return FromEdges(order() - 1, kept);
}

Graph Graph::WithoutEdge(Vertex u, Vertex v) const {
  std::vector<Edge> kept;
  for (auto [a, b] : edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    kept.emplace_back(a, b);
  }
  return FromEdges(order(), kept);
}

}  // namespace drs
