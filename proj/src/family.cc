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

#include "drs/family.h"

#include <string>

#include "drs/error.h"

namespace drs {

const char* FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath:
      return "Path";
    case FamilyKind::kCycle:
      return "Cycle";
    case FamilyKind::kComplete:
      return "Complete";
    case FamilyKind::kCompleteBipartite:
      return "CompleteBipartite";
    case FamilyKind::kStar:
      return "Star";
    case FamilyKind::kJoinK2Empty:
      return "JoinK2Empty";
    case FamilyKind::kTree:
      return "Tree";
    case FamilyKind::kUnicyclic:
      return "Unicyclic";
  }
  return "Unknown";
}

FamilyDescriptor FamilyDescriptor::Path(int n) {
  return {.kind = FamilyKind::kPath, .n = n};
}

FamilyDescriptor FamilyDescriptor::Cycle(int n) {
  return {.kind = FamilyKind::kCycle, .n = n};
}

FamilyDescriptor FamilyDescriptor::Complete(int n) {
  return {.kind = FamilyKind::kComplete, .n = n};
}

FamilyDescriptor FamilyDescriptor::CompleteBipartite(int r, int s) {
  if (r > s) std::swap(r, s);
  return {.kind = FamilyKind::kCompleteBipartite, .n = r + s, .r = r, .s = s};
}

FamilyDescriptor FamilyDescriptor::Star(int n) {
  return {.kind = FamilyKind::kStar, .n = n};
}

FamilyDescriptor FamilyDescriptor::JoinK2Empty(int m) {
  return {.kind = FamilyKind::kJoinK2Empty, .n = m + 2, .m = m};
}

FamilyDescriptor FamilyDescriptor::Tree(int n, int leaves) {
  return {.kind = FamilyKind::kTree, .n = n, .leaves = leaves};
}

FamilyDescriptor FamilyDescriptor::Unicyclic(int n, int cycle_length,
                                             int leaves) {
  return {.kind = FamilyKind::kUnicyclic,
          .n = n,
          .m = cycle_length,
          .leaves = leaves};
}

void FamilyDescriptor::Validate() const {
  auto fail = [this](const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument, ToString() + ": " + why);
  };
  switch (kind) {
    case FamilyKind::kPath:
    case FamilyKind::kComplete:
      if (n < 1) fail("order must be at least 1");
      break;
    case FamilyKind::kCycle:
      if (n < 3) fail("cycle order must be at least 3");
      break;
    case FamilyKind::kCompleteBipartite:
      if (r < 1 || s < r || n != r + s) fail("need 1 <= r <= s, n = r + s");
      break;
    case FamilyKind::kStar:
      if (n < 2) fail("star order must be at least 2");
      break;
    case FamilyKind::kJoinK2Empty:
      if (m < 1 || n != m + 2) fail("need m >= 1, n = m + 2");
      break;
    case FamilyKind::kTree:
      if (n < 1 || leaves < 0 || leaves > n) fail("bad order or leaf count");
      break;
    case FamilyKind::kUnicyclic:
      if (m < 3 || m > n || leaves < 0 || leaves > n - m) {
        fail("need 3 <= m <= n and 0 <= leaves <= n - m");
      }
      break;
  }
}

std::string FamilyDescriptor::ToString() const {
  std::string out = FamilyKindName(kind);
  switch (kind) {
    case FamilyKind::kCompleteBipartite:
      return out + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
    case FamilyKind::kJoinK2Empty:
      return out + "(" + std::to_string(m) + ")";
    case FamilyKind::kTree:
      return out + "(" + std::to_string(n) + ";l=" + std::to_string(leaves) +
             ")";
    case FamilyKind::kUnicyclic:
      return out + "(" + std::to_string(n) + "," + std::to_string(m) +
             ";l=" + std::to_string(leaves) + ")";
    default:
      return out + "(" + std::to_string(n) + ")";
  }
}

}  // namespace drs
