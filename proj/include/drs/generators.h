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

#ifndef DRS_GENERATORS_H_
#define DRS_GENERATORS_H_

#include <cstdint>
#include <random>

#include "drs/family.h"
#include "drs/graph.h"

namespace drs {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. Implemented on raw engine output so the
// sequence is identical across standard library implementations.
int UniformInt(Rng& rng, int lo, int hi);
// Uniform double in [0, 1).
double UniformUnit(Rng& rng);

// Labelings:
//   path, cycle: consecutive vertices 0..n-1;
//   K_{r,s}: first part 0..r-1, second part r..r+s-1;
//   star: center 0;
//   K_2 v empty(m): the K_2 is {0, 1}, the independent set 2..m+1.
// Invalid parameters throw Error(kInvalidArgument).
Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int r, int s);
Graph StarGraph(int n);
Graph JoinK2EmptyGraph(int m);

// Instance of a rigid family. kTree and kUnicyclic do not determine a
// single graph and throw Error(kInvalidArgument).
Graph Generate(const FamilyDescriptor& family);

// Uniform labeled tree from a random Pruefer sequence. n >= 1.
Graph RandomTree(int n, Rng& rng);
// Random tree plus one random non-edge. n >= 3.
Graph RandomUnicyclic(int n, Rng& rng);
// G(n, p) resampled until connected. n >= 1, 0 < p <= 1.
Graph RandomConnected(int n, double p, Rng& rng);

}  // namespace drs

#endif  // DRS_GENERATORS_H_
