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

#include "drs/constructive.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "drs/error.h"
#include "drs/resolve.h"

namespace drs {

VertexSet ConstructDiametral(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  if (n < 2 || dm.order() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "diametral construction needs n >= 2 and matching distances");
  }
  const int diam = dm.diameter();
  Vertex a = -1;
  Vertex b = -1;
  for (Vertex u = 0; u < n && a < 0; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (dm(u, v) == diam) {
        a = u;
        b = v;
        break;
      }
    }
  }

  std::vector<char> interior(n, 0);
  Vertex cur = b;
  while (dm(a, cur) > 1) {
    Vertex step = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (dm(a, w) == dm(a, cur) - 1) {
        step = w;
        break;
      }
    }
    interior[step] = 1;
    cur = step;
  }

  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (!interior[v]) kept.push_back(v);
  }
  return VertexSet(n, std::move(kept));
}

VertexSet ConstructTreeBasis(const Graph& g) {
  if (g.order() < 2 || !IsTree(g)) {
    throw Error(ErrorCode::kNotApplicable,
                "tree basis needs a tree with at least two vertices");
  }
  return Leaves(g);
}

DistanceMatrix CycleDistances(const CycleStructure& cycle) {
  const int m = cycle.length();
  std::vector<std::int32_t> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int gap = std::abs(i - j);
      table[static_cast<size_t>(i) * m + j] = std::min(gap, m - gap);
    }
  }
  return DistanceMatrixFromTable(m, std::move(table));
}

CycleBasis CycleBasisPreferringBranchVertices(const Graph& g,
                                              const CycleStructure& cycle) {
  const int m = cycle.length();
  if (m == g.order()) {
    throw Error(ErrorCode::kNotApplicable,
                "graph is a bare cycle; use the cycle closed form");
  }
  const DistanceMatrix dc = CycleDistances(cycle);
  const int k = m % 2 == 1 ? 2 : 3;

  // Cycle positions ordered by vertex index, so combinations come out in
  // lexicographic order of the vertex sets.
  std::vector<int> by_vertex(m);
  for (int i = 0; i < m; ++i) by_vertex[i] = i;
  std::sort(by_vertex.begin(), by_vertex.end(), [&](int i, int j) {
    return cycle.cycle[i] < cycle.cycle[j];
  });

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  int best_u = k + 1;
  std::vector<Vertex> best;
  while (true) {
    std::vector<int> positions;
    for (int i : pick) positions.push_back(by_vertex[i]);
    if (IsDoublyResolvingSet(dc, VertexSet(m, positions))) {
      int u = 0;
      std::vector<Vertex> members;
      for (int p : positions) {
        members.push_back(cycle.cycle[p]);
        if (g.degree(cycle.cycle[p]) == 2) ++u;
      }
      if (u < best_u) {
        best_u = u;
        best = std::move(members);
        if (u == 0) break;
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (best.empty()) {
    throw std::logic_error("no doubly resolving set of the bare cycle C_" +
                           std::to_string(m) + " of size " +
                           std::to_string(k));
  }

  CycleBasis out;
  std::vector<Vertex> two;
  for (Vertex v : best) {
    if (g.degree(v) == 2) two.push_back(v);
  }
  out.basis = VertexSet(g.order(), std::move(best));
  out.degree_two = VertexSet(g.order(), std::move(two));
  return out;
}

VertexSet ConstructUnicyclic(const Graph& g) {
  const CycleStructure cycle = FindCycle(g);
  const CycleBasis basis = CycleBasisPreferringBranchVertices(g, cycle);
  const VertexSet w = Leaves(g).Union(basis.degree_two);
  const Verdict verdict = CheckDoublyResolving(AllPairsShortestPaths(g), w);
  if (!verdict.doubly_resolving) {
    throw std::logic_error("unicyclic construction " + w.ToString() +
                           " fails on pair " +
                           std::to_string(verdict.witness->u) + "," +
                           std::to_string(verdict.witness->v));
  }
  return w;
}

}  // namespace drs
