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

#ifndef DRS_FAMILIES_H_
#define DRS_FAMILIES_H_

#include <optional>
#include <string>
#include <vector>

#include "drs/family.h"
#include "drs/graph.h"

namespace drs {

// Every family g belongs to, tested structurally (degrees, bipartition,
// edge count), never by isomorphism search. Small graphs match several
// kinds: K_3 is Complete(3), Cycle(3), JoinK2Empty(1) and Unicyclic(3,3).
// Result order follows FamilyKind. Throws Error(kDisconnected).
std::vector<FamilyDescriptor> Recognize(const Graph& g);

// Closed interval known to contain psi. Exact for every family except
// kUnicyclic, where only l <= psi <= l + 1 (odd cycle) or l + 2 (even
// cycle) is known.
struct PsiInterval {
  int lo = 0;
  int hi = 0;

  bool exact() const { return lo == hi; }
  bool Contains(int psi) const { return lo <= psi && psi <= hi; }
  std::string ToString() const;

  friend bool operator==(const PsiInterval&, const PsiInterval&) = default;
};

// Throws Error(kNotApplicable) when no closed form covers the descriptor:
// orders below the range of the formula (K_1, P_1, K_{r,s} with r+s < 3)
// and Unicyclic descriptors of bare cycles.
PsiInterval ClosedFormPsi(const FamilyDescriptor& family);

// psi(G) = n - 1 exactly for K_n, K_{1,n-1}, K_{2,n-2} and K_2 v empty(n-2).
// Returns the matching family, reported in that order of preference, or
// nullopt. Throws Error(kInvalidArgument) for n < 3, Error(kDisconnected).
std::optional<FamilyDescriptor> ClassifyNMinus1(const Graph& g);

}  // namespace drs

#endif  // DRS_FAMILIES_H_
