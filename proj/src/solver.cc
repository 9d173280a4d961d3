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

#include "drs/solver.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drs/constructive.h"
#include "drs/error.h"
#include "drs/resolve.h"

namespace drs {

const char* LowerBoundSourceName(LowerBoundSource s) {
  switch (s) {
    case LowerBoundSource::kTrivial:
      return "trivial-2";
    case LowerBoundSource::kLeaves:
      return "leaves";
    case LowerBoundSource::kTwinClasses:
      return "twin-classes";
  }
  return "unknown";
}

const char* UpperBoundSourceName(UpperBoundSource s) {
  switch (s) {
    case UpperBoundSource::kOrderMinusOne:
      return "n-1";
    case UpperBoundSource::kDiametral:
      return "n-d+1";
    case UpperBoundSource::kConstructive:
      return "constructive";
  }
  return "unknown";
}

const char* CertificateName(Certificate c) {
  switch (c) {
    case Certificate::kBound:
      return "bound";
    case Certificate::kExhaustion:
      return "exhaustion";
  }
  return "unknown";
}

VertexSet ForcedVertices(const Graph& g) { return Leaves(g); }

LowerBound ComputeLowerBound(const Graph& g, const TwinPartition& twins) {
  const VertexSet leaves = Leaves(g);
  int twin_term = 0;
  for (const auto& c : twins.classes) {
    twin_term += static_cast<int>(c.members.size()) - 1;
  }
  for (Vertex v : leaves) {
    if (twins.ClassOf(v) < 0) ++twin_term;
  }
  const int value = std::max({2, leaves.size(), twin_term});
  if (value > 2 && leaves.size() == value) {
    return {value, LowerBoundSource::kLeaves};
  }
  if (value > 2) return {value, LowerBoundSource::kTwinClasses};
  return {2, LowerBoundSource::kTrivial};
}

UpperBound ComputeUpperBound(const Graph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "upper bound needs at least three vertices");
  }
  UpperBound ub;
  if (dm.diameter() >= 2) {
    ub.value = n - dm.diameter() + 1;
    ub.source = UpperBoundSource::kDiametral;
    ub.witness = ConstructDiametral(g, dm);
  } else {
    ub.value = n - 1;
    ub.source = UpperBoundSource::kOrderMinusOne;
    for (Vertex v = 0; v < n; ++v) {
      VertexSet w = VertexSet::All(n).Without(v);
      if (IsDoublyResolvingSet(dm, w)) {
        ub.witness = std::move(w);
        break;
      }
    }
  }
  if (ub.witness.size() != ub.value || !IsDoublyResolvingSet(dm, ub.witness)) {
    throw std::logic_error("upper bound witness " + ub.witness.ToString() +
                           " does not verify");
  }
  return ub;
}

namespace {

// Depth-first enumeration of the k-sets that contain every forced vertex
// and leave out at most one member of each twin class. Members are decided
// in increasing vertex order with "take" tried before "skip", so sets are
// visited in lexicographic order.
class CandidateSearch {
 public:
  CandidateSearch(const DistanceMatrix& dm, const VertexSet& forced,
                  const TwinPartition& twins)
      : dm_(dm), n_(dm.order()), forced_(n_, 0), class_of_(n_, -1) {
    for (Vertex v : forced) forced_[v] = 1;
    for (Vertex v = 0; v < n_; ++v) class_of_[v] = twins.ClassOf(v);
    class_skipped_.assign(twins.classes.size(), 0);
    forced_suffix_.assign(n_ + 1, 0);
    for (Vertex v = n_ - 1; v >= 0; --v) {
      forced_suffix_[v] = forced_suffix_[v + 1] + forced_[v];
    }
  }

  std::optional<VertexSet> FirstOfSize(int k) {
    k_ = k;
    chosen_.clear();
    found_.reset();
    Visit(0);
    return found_;
  }

  std::int64_t examined() const { return examined_; }

 private:
  bool Visit(Vertex v) {
    const int have = static_cast<int>(chosen_.size());
    if (have + forced_suffix_[v] > k_ || have + (n_ - v) < k_) return false;
    if (v == n_) {
      ++examined_;
      VertexSet w(n_, chosen_);
      if (IsDoublyResolvingSet(dm_, w)) {
        found_ = std::move(w);
        return true;
      }
      return false;
    }
    if (have < k_) {
      chosen_.push_back(v);
      if (Visit(v + 1)) return true;
      chosen_.pop_back();
    }
    if (forced_[v]) return false;
    const int c = class_of_[v];
    if (c >= 0 && class_skipped_[c]) return false;
    if (c >= 0) class_skipped_[c] = 1;
    const bool hit = Visit(v + 1);
    if (c >= 0) class_skipped_[c] = 0;
    return hit;
  }

  const DistanceMatrix& dm_;
  const int n_;
  std::vector<char> forced_;
  std::vector<int> class_of_;
  std::vector<char> class_skipped_;
  std::vector<int> forced_suffix_;
  std::vector<Vertex> chosen_;
  std::optional<VertexSet> found_;
  int k_ = 0;
  std::int64_t examined_ = 0;
};

}  // namespace

SolveResult SolvePsi(const Graph& g, const SolveOptions& options) {
  const int n = g.order();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "psi is defined for graphs with at least two vertices");
  }
  if (n > options.cap) {
    throw Error(ErrorCode::kOverCap,
                "graph has " + std::to_string(n) +
                    " vertices, above the solver cap of " +
                    std::to_string(options.cap));
  }
  const DistanceMatrix dm = AllPairsShortestPaths(g);

  SolveResult result;
  if (n == 2) {
    result.psi = 2;
    result.witness = VertexSet::All(2);
    result.lower = {2, LowerBoundSource::kTrivial};
    result.upper = {2, UpperBoundSource::kDiametral, result.witness};
    result.certificate = Certificate::kBound;
    return result;
  }

  const TwinPartition twins = ComputeTwinPartition(g);
  const VertexSet forced = ForcedVertices(g);
  result.lower = ComputeLowerBound(g, twins);
  result.upper = ComputeUpperBound(g, dm);
  if (IsTree(g)) {
    VertexSet leaves = ConstructTreeBasis(g);
    if (leaves.size() < result.upper.value) {
      result.upper = {leaves.size(), UpperBoundSource::kConstructive,
                      std::move(leaves)};
    }
  } else if (IsUnicyclic(g) && FindCycle(g).length() < n) {
    VertexSet w = ConstructUnicyclic(g);
    if (w.size() < result.upper.value) {
      result.upper = {w.size(), UpperBoundSource::kConstructive, std::move(w)};
    }
  }

  CandidateSearch search(dm, forced, twins);
  for (int k = result.lower.value; k <= result.upper.value; ++k) {
    if (auto w = search.FirstOfSize(k)) {
      result.psi = k;
      result.witness = std::move(*w);
      result.certificate = k == result.lower.value ? Certificate::kBound
                                                   : Certificate::kExhaustion;
      result.candidates_examined = search.examined();
      return result;
    }
  }
  throw std::logic_error("no doubly resolving set found up to the upper bound " +
                         std::to_string(result.upper.value));
}

}  // namespace drs
