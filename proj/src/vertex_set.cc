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

#include "drs/vertex_set.h"

#include <algorithm>
#include <numeric>

#include "drs/error.h"

namespace drs {

VertexSet::VertexSet(int universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= universe_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(members_[i]) +
                      " outside 0.." + std::to_string(universe_ - 1));
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(members_[i]) + " listed twice");
    }
  }
}

VertexSet VertexSet::All(int universe) {
  std::vector<Vertex> all(universe);
  std::iota(all.begin(), all.end(), 0);
  return VertexSet(universe, std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

VertexSet VertexSet::With(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> next = members_;
  next.push_back(v);
  return VertexSet(universe_, std::move(next));
}

VertexSet VertexSet::Without(Vertex v) const {
  std::vector<Vertex> next;
  next.reserve(members_.size());
  for (Vertex m : members_) {
    if (m != v) next.push_back(m);
  }
  return VertexSet(universe_, std::move(next));
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  std::vector<Vertex> merged;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  return VertexSet(std::max(universe_, other.universe_), std::move(merged));
}

std::string VertexSet::ToString() const {
  std::string out = "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members_[i]);
  }
  out += '}';
  return out;
}

}  // namespace drs
