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

#include "drs/oracle.h"

#include <algorithm>
#include <bit>
#include <string>

#include "drs/error.h"

namespace drs::oracle {

std::vector<std::vector<int>> FloydWarshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, n));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

bool LiteralDoublyResolving(const std::vector<std::vector<int>>& dist,
                            const VertexSet& w) {
  const int n = static_cast<int>(dist.size());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool resolved = false;
      for (Vertex x : w) {
        for (Vertex y : w) {
          if (dist[v][x] - dist[u][x] != dist[v][y] - dist[u][y]) {
            resolved = true;
          }
        }
      }
      if (!resolved) return false;
    }
  }
  return true;
}

namespace {

struct Search {
  int psi = 0;
  std::vector<VertexSet> minimum_sets;
};

Search Exhaust(const Graph& g) {
  const int n = g.order();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "psi is defined for graphs with at least two vertices");
  }
  if (n > kOracleCap) {
    throw Error(ErrorCode::kOverCap,
                "brute-force oracle is limited to " +
                    std::to_string(kOracleCap) + " vertices");
  }
  const auto dist = FloydWarshall(g);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (dist[u][v] >= n) {
        throw Error(ErrorCode::kDisconnected, "graph is disconnected");
      }
    }
  }

  Search out;
  for (int k = 2; k <= n; ++k) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<Vertex> members;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) members.push_back(v);
      }
      VertexSet w(n, std::move(members));
      if (LiteralDoublyResolving(dist, w)) out.minimum_sets.push_back(w);
    }
    if (!out.minimum_sets.empty()) {
      out.psi = k;
      std::sort(out.minimum_sets.begin(), out.minimum_sets.end());
      return out;
    }
  }
  return out;
}

}  // namespace

SolveResult BruteForcePsi(const Graph& g) {
  Search s = Exhaust(g);
  SolveResult result;
  result.psi = s.psi;
  result.witness = s.minimum_sets.front();
  result.certificate = Certificate::kExhaustion;
  result.candidates_examined = static_cast<std::int64_t>(1) << g.order();
  return result;
}

std::vector<VertexSet> AllMinimumSets(const Graph& g) {
  return Exhaust(g).minimum_sets;
}

}  // namespace drs::oracle
