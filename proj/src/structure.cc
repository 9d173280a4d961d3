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

#include "drs/structure.h"

#include <algorithm>
#include <queue>
#include <string>

#include "drs/distance.h"
#include "drs/error.h"

namespace drs {

bool IsConnected(const Graph& g) {
  if (g.order() == 0) return true;
  const std::vector<int> dist = BfsDistances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool IsTree(const Graph& g) {
  return g.size() == g.order() - 1 && IsConnected(g);
}

bool IsUnicyclic(const Graph& g) {
  return g.size() == g.order() && IsConnected(g);
}

VertexSet Leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return VertexSet(g.order(), std::move(out));
}

bool AreTwins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return false;
  auto strip = [](std::span<const Vertex> nbrs, Vertex drop) {
    std::vector<Vertex> out;
    for (Vertex x : nbrs) {
      if (x != drop) out.push_back(x);
    }
    return out;
  };
  return strip(g.neighbors(u), v) == strip(g.neighbors(v), u);
}

int TwinPartition::ClassOf(Vertex v) const {
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto& m = classes[i].members;
    if (std::binary_search(m.begin(), m.end(), v)) return static_cast<int>(i);
  }
  return -1;
}

namespace {

// Groups vertices by `key(v)`; returns groups of size >= 2.
template <typename KeyFn>
std::vector<std::vector<Vertex>> GroupBy(int n, KeyFn key) {
  std::vector<std::pair<std::vector<Vertex>, Vertex>> keyed;
  keyed.reserve(n);
  for (Vertex v = 0; v < n; ++v) keyed.emplace_back(key(v), v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<Vertex>> groups;
  for (size_t i = 0; i < keyed.size();) {
    size_t j = i;
    std::vector<Vertex> group;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) {
      group.push_back(keyed[j].second);
      ++j;
    }
    if (group.size() >= 2) groups.push_back(std::move(group));
    i = j;
  }
  return groups;
}

}  // namespace

TwinPartition ComputeTwinPartition(const Graph& g) {
  const int n = g.order();
  TwinPartition tp;
  auto open = GroupBy(n, [&](Vertex v) {
    auto nbrs = g.neighbors(v);
    return std::vector<Vertex>(nbrs.begin(), nbrs.end());
  });
  auto closed = GroupBy(n, [&](Vertex v) {
    auto nbrs = g.neighbors(v);
    std::vector<Vertex> key(nbrs.begin(), nbrs.end());
    key.insert(std::lower_bound(key.begin(), key.end(), v), v);
    return key;
  });
  for (auto& m : open) tp.classes.push_back({TwinKind::kOpen, std::move(m)});
  for (auto& m : closed) {
    tp.classes.push_back({TwinKind::kClosed, std::move(m)});
  }
  std::sort(tp.classes.begin(), tp.classes.end(),
            [](const TwinClass& a, const TwinClass& b) {
              return a.members.front() < b.members.front();
            });

  std::vector<int> class_of(n, -1);
  for (size_t i = 0; i < tp.classes.size(); ++i) {
    for (Vertex v : tp.classes[i].members) {
      if (class_of[v] >= 0) {
        // A vertex with both an open and a closed twin.
        tp.mixed_pairs.emplace_back(v, v);
      }
      class_of[v] = static_cast<int>(i);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (AreTwins(g, u, v) && (class_of[u] < 0 || class_of[u] != class_of[v])) {
        tp.mixed_pairs.emplace_back(u, v);
      }
    }
  }
  return tp;
}

bool CycleStructure::OnCycle(Vertex v) const {
  return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

CycleStructure FindCycle(const Graph& g) {
  const int n = g.order();
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  }
  if (g.size() != n) {
    throw Error(ErrorCode::kNotApplicable,
                "graph is not unicyclic: " + std::to_string(g.size()) +
                    " edges on " + std::to_string(n) + " vertices");
  }

  // Strip leaves until only the cycle remains.
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  std::queue<Vertex> peel;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) peel.push(v);
  }
  while (!peel.empty()) {
    const Vertex v = peel.front();
    peel.pop();
    removed[v] = true;
    for (Vertex u : g.neighbors(v)) {
      if (!removed[u] && --degree[u] == 1) peel.push(u);
    }
  }

  CycleStructure cs;
  Vertex start = 0;
  while (removed[start]) ++start;
  Vertex prev = -1;
  Vertex cur = start;
  do {
    cs.cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex u : g.neighbors(cur)) {
      if (!removed[u] && u != prev) {
        next = u;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);

  // Multi-source BFS from the cycle labels each tree vertex with its root.
  std::vector<Vertex> root(n, -1);
  std::queue<Vertex> frontier;
  for (Vertex c : cs.cycle) {
    root[c] = c;
    frontier.push(c);
  }
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      if (root[v] < 0) {
        root[v] = root[u];
        frontier.push(v);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) cs.attachments[root[v]].push_back(v);
  }
  return cs;
}

}  // namespace drs
