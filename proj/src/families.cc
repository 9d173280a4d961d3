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

#include "drs/families.h"

#include <algorithm>
#include <queue>

#include "drs/error.h"
#include "drs/structure.h"

namespace drs {
namespace {

struct DegreeProfile {
  int leaves = 0;
  int two = 0;
  int universal = 0;
};

DegreeProfile Profile(const Graph& g) {
  DegreeProfile p;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 1) ++p.leaves;
    if (d == 2) ++p.two;
    if (d == g.order() - 1) ++p.universal;
  }
  return p;
}

// Part sizes (r <= s) when g is complete bipartite with both parts
// non-empty.
std::optional<std::pair<int, int>> CompleteBipartiteParts(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<int> side(n, -1);
  std::queue<Vertex> frontier;
  side[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        frontier.push(v);
      } else if (side[v] == side[u]) {
        return std::nullopt;
      }
    }
  }
  const int r = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int s = n - r;
  if (r == 0 || s == 0 || g.size() != r * s) return std::nullopt;
  return std::make_pair(std::min(r, s), std::max(r, s));
}

bool IsJoinK2Empty(const Graph& g, const DegreeProfile& p) {
  // Two universal vertices account for 2(n-2)+1 edges; any more would lie
  // inside the independent part.
  return g.order() >= 3 && p.universal >= 2 && g.size() == 2 * g.order() - 3;
}

void RequireConnected(const Graph& g) {
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  }
}

[[noreturn]] void NoClosedForm(const FamilyDescriptor& f) {
  throw Error(ErrorCode::kNotApplicable,
              "no closed form for " + f.ToString());
}

}  // namespace

std::vector<FamilyDescriptor> Recognize(const Graph& g) {
  RequireConnected(g);
  const int n = g.order();
  const DegreeProfile p = Profile(g);
  const auto parts = CompleteBipartiteParts(g);
  std::vector<FamilyDescriptor> out;

  if (n >= 2 && p.leaves == 2 && p.two == n - 2 && g.size() == n - 1) {
    out.push_back(FamilyDescriptor::Path(n));
  }
  if (n >= 3 && p.two == n) out.push_back(FamilyDescriptor::Cycle(n));
  if (p.universal == n) out.push_back(FamilyDescriptor::Complete(n));
  if (parts) {
    out.push_back(FamilyDescriptor::CompleteBipartite(parts->first,
                                                      parts->second));
    if (parts->first == 1) out.push_back(FamilyDescriptor::Star(n));
  }
  if (IsJoinK2Empty(g, p)) out.push_back(FamilyDescriptor::JoinK2Empty(n - 2));
  if (g.size() == n - 1) {
    out.push_back(FamilyDescriptor::Tree(n, p.leaves));
  }
  if (g.size() == n) {
    out.push_back(
        FamilyDescriptor::Unicyclic(n, FindCycle(g).length(), p.leaves));
  }
  return out;
}

std::string PsiInterval::ToString() const {
  if (exact()) return std::to_string(lo);
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

PsiInterval ClosedFormPsi(const FamilyDescriptor& f) {
  f.Validate();
  switch (f.kind) {
    case FamilyKind::kPath:
      if (f.n < 2) NoClosedForm(f);
      return {2, 2};
    case FamilyKind::kCycle: {
      const int psi = f.n % 2 == 1 ? 2 : 3;
      return {psi, psi};
    }
    case FamilyKind::kComplete: {
      if (f.n < 2) NoClosedForm(f);
      const int psi = std::max(f.n - 1, 2);
      return {psi, psi};
    }
    case FamilyKind::kCompleteBipartite: {
      if (f.n < 3) NoClosedForm(f);
      const int psi = f.r <= 2 ? f.n - 1 : f.n - 2;
      return {psi, psi};
    }
    case FamilyKind::kStar:
      if (f.n < 3) NoClosedForm(f);
      return {f.n - 1, f.n - 1};
    case FamilyKind::kJoinK2Empty:
      return {f.m + 1, f.m + 1};
    case FamilyKind::kTree:
      if (f.n < 2) NoClosedForm(f);
      return {f.leaves, f.leaves};
    case FamilyKind::kUnicyclic:
      if (f.m == f.n) NoClosedForm(f);
      return {f.leaves, f.leaves + (f.m % 2 == 1 ? 1 : 2)};
  }
  NoClosedForm(f);
}

std::optional<FamilyDescriptor> ClassifyNMinus1(const Graph& g) {
  const int n = g.order();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "classification needs at least three vertices");
  }
  RequireConnected(g);
  const DegreeProfile p = Profile(g);
  if (p.universal == n) return FamilyDescriptor::Complete(n);
  if (const auto parts = CompleteBipartiteParts(g)) {
    if (parts->first == 1) return FamilyDescriptor::Star(n);
    if (parts->first == 2) return FamilyDescriptor::CompleteBipartite(2, n - 2);
  }
  if (IsJoinK2Empty(g, p)) return FamilyDescriptor::JoinK2Empty(n - 2);
  return std::nullopt;
}

}  // namespace drs
