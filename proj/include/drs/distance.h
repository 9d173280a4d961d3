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

#ifndef DRS_DISTANCE_H_
#define DRS_DISTANCE_H_

#include <cstdint>
#include <vector>

#include "drs/graph.h"

namespace drs {

// Dense n x n hop-distance table of a connected graph. Every entry is
// finite; the diagonal is zero and the table is symmetric.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  int order() const { return n_; }
  int diameter() const { return diameter_; }

  int operator()(Vertex u, Vertex v) const {
    return distances_[static_cast<size_t>(u) * n_ + v];
  }

  // Row `u` as a contiguous span of length order().
  const std::int32_t* row(Vertex u) const {
    return distances_.data() + static_cast<size_t>(u) * n_;
  }

 private:
  friend DistanceMatrix AllPairsShortestPaths(const Graph& g);
  friend DistanceMatrix DistanceMatrixFromTable(
      int n, std::vector<std::int32_t> table);

  int n_ = 0;
  int diameter_ = 0;
  std::vector<std::int32_t> distances_;
};

// One BFS per source. Throws Error(kDisconnected) naming a vertex pair
// with no connecting path.
DistanceMatrix AllPairsShortestPaths(const Graph& g);

// Wraps a precomputed row-major table (used for the bare cycle of a
// unicyclic graph). Throws Error(kInvalidArgument) on a size mismatch.
DistanceMatrix DistanceMatrixFromTable(int n, std::vector<std::int32_t> table);

// Hop distances from `source`; unreachable vertices get -1.
std::vector<int> BfsDistances(const Graph& g, Vertex source);

}  // namespace drs

#endif  // DRS_DISTANCE_H_
