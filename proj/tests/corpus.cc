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

#include "corpus.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "drs/distance.h"
#include "drs/generators.h"
#include "drs/structure.h"

namespace drs::testing {
namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) degrees_.push_back(g.degree(v));
    slot_degree_ = degrees_;
    std::sort(slot_degree_.rbegin(), slot_degree_.rend());
    used_.assign(n_, 0);
  }

  std::uint64_t Run() {
    Place(0);
    return best_;
  }

 private:
  void Place(int slot) {
    if (slot == n_) {
      std::uint64_t code = 0;
      for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
          code = code << 1 | (g_.adjacent(order_[i], order_[j]) ? 1u : 0u);
        }
      }
      best_ = std::max(best_, code);
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || degrees_[v] != slot_degree_[slot]) continue;
      used_[v] = 1;
      order_.push_back(v);
      Place(slot + 1);
      order_.pop_back();
      used_[v] = 0;
    }
  }

  const Graph& g_;
  const int n_;
  std::vector<int> degrees_;
  std::vector<int> slot_degree_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t CanonicalCode(const Graph& g) { return Canonicalizer(g).Run(); }

std::vector<Graph> AllGraphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("AllGraphs supports 1..7");
  if (n == 1) return {Graph(1)};
  // Every graph on n vertices is some graph on n-1 vertices plus a new
  // vertex joined to a subset of them.
  std::map<std::uint64_t, Graph> seen;
  for (const Graph& base : AllGraphs(n - 1)) {
    const std::vector<Edge> base_edges = base.edges();
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = base_edges;
      for (Vertex v = 0; v < n - 1; ++v) {
        if (mask >> v & 1u) edges.emplace_back(v, n - 1);
      }
      Graph g = Graph::FromEdges(n, edges);
      seen.try_emplace(CanonicalCode(g), std::move(g));
    }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> ConnectedGraphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : AllGraphs(n)) {
    if (IsConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> RandomConnectedGraphs(int n, int count,
                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(RandomConnected(n, 0.2 + 0.6 * UniformUnit(rng), rng));
  }
  return out;
}

bool SameInvariants(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  auto distances = [](const Graph& g) {
    const DistanceMatrix dm = AllPairsShortestPaths(g);
    std::vector<int> d;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) d.push_back(dm(u, v));
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  return degrees(a) == degrees(b) && distances(a) == distances(b);
}

}  // namespace drs::testing
