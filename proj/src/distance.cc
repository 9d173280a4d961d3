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

#include "drs/distance.h"

#include <algorithm>
#include <queue>
#include <string>

#include "drs/error.h"

namespace drs {

std::vector<int> BfsDistances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

DistanceMatrix AllPairsShortestPaths(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.distances_.resize(static_cast<size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    const std::vector<int> dist = BfsDistances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw Error(ErrorCode::kDisconnected,
                    "graph is disconnected: no path between " +
                        std::to_string(s) + " and " + std::to_string(t));
      }
      dm.distances_[static_cast<size_t>(s) * n + t] = dist[t];
      dm.diameter_ = std::max(dm.diameter_, dist[t]);
    }
  }
  return dm;
}

DistanceMatrix DistanceMatrixFromTable(int n, std::vector<std::int32_t> table) {
  if (n < 0 || table.size() != static_cast<size_t>(n) * n) {
    throw Error(ErrorCode::kInvalidArgument,
                "distance table size does not match order " +
                    std::to_string(n));
  }
  DistanceMatrix dm;
  dm.n_ = n;
  dm.diameter_ =
      table.empty() ? 0 : *std::max_element(table.begin(), table.end());
  dm.distances_ = std::move(table);
  return dm;
}

}  // namespace drs
