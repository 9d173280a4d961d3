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

#ifndef DRS_FAMILY_H_
#define DRS_FAMILY_H_

#include <string>

namespace drs {

enum class FamilyKind {
  kPath,               // P_n
  kCycle,              // C_n, n >= 3
  kComplete,           // K_n
  kCompleteBipartite,  // K_{r,s}, r <= s
  kStar,               // K_{1,n-1}
  kJoinK2Empty,        // K_2 joined with the empty graph on m vertices
  kTree,
  kUnicyclic,
};

const char* FamilyKindName(FamilyKind kind);

// Membership of a graph in one of the named families. Only the fields that
// belong to `kind` are meaningful; the rest stay zero.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::kPath;
  int n = 0;       // order
  int r = 0;       // kCompleteBipartite: smaller part
  int s = 0;       // kCompleteBipartite: larger part
  int m = 0;       // kJoinK2Empty: independent part; kUnicyclic: cycle length
  int leaves = 0;  // kTree, kUnicyclic

  static FamilyDescriptor Path(int n);
  static FamilyDescriptor Cycle(int n);
  static FamilyDescriptor Complete(int n);
  // Normalizes so that r <= s.
  static FamilyDescriptor CompleteBipartite(int r, int s);
  static FamilyDescriptor Star(int n);
  static FamilyDescriptor JoinK2Empty(int m);
  static FamilyDescriptor Tree(int n, int leaves);
  static FamilyDescriptor Unicyclic(int n, int cycle_length, int leaves);

  // Throws Error(kInvalidArgument) when the parameters do not fit `kind`.
  void Validate() const;

  // e.g. "Cycle(4)", "CompleteBipartite(2,3)", "Unicyclic(7,4;l=2)".
  std::string ToString() const;

  friend bool operator==(const FamilyDescriptor&,
                         const FamilyDescriptor&) = default;
};

}  // namespace drs

#endif  // DRS_FAMILY_H_
