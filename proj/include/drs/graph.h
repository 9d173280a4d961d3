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

#ifndef DRS_GRAPH_H_
#define DRS_GRAPH_H_

#include <span>
#include <utility>
#include <vector>

namespace drs {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on the vertices 0..n-1. Immutable once built.
// Neighbor lists are kept sorted so iteration order is deterministic.
// Connectivity is not an invariant; operations that need it check it.
class Graph {
 public:
  Graph() = default;

  // Graph with `n` vertices and no edges. Requires n >= 1.
  explicit Graph(int n);

  // Throws Error(kParse) on a self-loop, a repeated edge (in either
  // orientation) or an endpoint outside 0..n-1.
  static Graph FromEdges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  // All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Subgraph induced on every vertex except `v`; remaining vertices keep
  // their relative order and are renumbered densely.
  Graph WithoutVertex(Vertex v) const;
  Graph WithoutEdge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int num_edges_ = 0;
};

}  // namespace drs

#endif  // DRS_GRAPH_H_
