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

// Exact doubly resolving number psi(G).
//
// The search walks k upward from a lower bound and, at each k, enumerates
// candidate sets in lexicographic order. Candidates always contain every
// leaf and omit at most one vertex of each twin class, since any doubly
// resolving set must. The first k with a verifying candidate is psi(G) and
// that candidate is the lexicographically least minimum set.

#ifndef DRS_SOLVER_H_
#define DRS_SOLVER_H_

#include <cstdint>
#include <string>

#include "drs/distance.h"
#include "drs/graph.h"
#include "drs/structure.h"
#include "drs/vertex_set.h"

namespace drs {

inline constexpr int kDefaultSolverCap = 16;

enum class LowerBoundSource { kTrivial, kLeaves, kTwinClasses };
enum class UpperBoundSource { kOrderMinusOne, kDiametral, kConstructive };
// kBound: psi met the lower bound. kExhaustion: every candidate of size
// psi - 1 was rejected.
enum class Certificate { kBound, kExhaustion };

const char* LowerBoundSourceName(LowerBoundSource s);  // "trivial-2", ...
const char* UpperBoundSourceName(UpperBoundSource s);  // "n-1", ...
const char* CertificateName(Certificate c);

struct LowerBound {
  int value = 2;
  LowerBoundSource source = LowerBoundSource::kTrivial;
};

struct UpperBound {
  int value = 0;
  UpperBoundSource source = UpperBoundSource::kDiametral;
  VertexSet witness;  // verified doubly resolving, |witness| == value
};

struct SolveResult {
  int psi = 0;
  VertexSet witness;
  LowerBound lower;
  UpperBound upper;
  Certificate certificate = Certificate::kBound;
  std::int64_t candidates_examined = 0;
};

struct SolveOptions {
  int cap = kDefaultSolverCap;
};

// The leaves of g; every doubly resolving set contains them.
VertexSet ForcedVertices(const Graph& g);

// max(2, l(G), sum over twin classes of (|C| - 1) + leaves in no class).
LowerBound ComputeLowerBound(const Graph& g, const TwinPartition& twins);

// min(n - 1, n - diam + 1) with a verified set of that size: the diametral
// construction when diam >= 2, otherwise V minus one vertex.
// Requires n >= 3 and a connected g.
UpperBound ComputeUpperBound(const Graph& g, const DistanceMatrix& dm);

// Throws Error(kInvalidArgument) for n < 2, Error(kOverCap) for
// n > options.cap and Error(kDisconnected) for a disconnected g.
SolveResult SolvePsi(const Graph& g, const SolveOptions& options = {});

}  // namespace drs

#endif  // DRS_SOLVER_H_
