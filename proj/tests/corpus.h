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

// Graph corpora for tests: every graph up to isomorphism at small orders,
// seeded random samples, and a cheap isomorphism screen.

#ifndef DRS_TESTS_CORPUS_H_
#define DRS_TESTS_CORPUS_H_

#include <cstdint>
#include <vector>

#include "drs/graph.h"

namespace drs::testing {

// One representative per isomorphism class, connected or not. n <= 7.
std::vector<Graph> AllGraphs(int n);
// The connected members of AllGraphs(n).
std::vector<Graph> ConnectedGraphs(int n);

// Upper-triangle adjacency code maximized over degree-respecting
// relabelings; equal for isomorphic graphs.
std::uint64_t CanonicalCode(const Graph& g);

// Connected G(n, p) samples with p drawn per sample from [0.2, 0.8].
std::vector<Graph> RandomConnectedGraphs(int n, int count, std::uint64_t seed);

// Equal degree sequences and equal multisets of pairwise distances.
// Necessary for isomorphism, and sufficient for the rigid named families.
bool SameInvariants(const Graph& a, const Graph& b);

}  // namespace drs::testing

#endif  // DRS_TESTS_CORPUS_H_
