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

#ifndef DRS_VERTEX_SET_H_
#define DRS_VERTEX_SET_H_

#include <span>
#include <string>
#include <vector>

#include "drs/graph.h"

namespace drs {

// A set of vertices of a host graph of order `universe()`. Members are
// stored ascending with no duplicates.
class VertexSet {
 public:
  VertexSet() = default;

  // Sorts and validates `members`. Throws Error(kInvalidArgument) on a
  // duplicate or an index outside 0..universe-1.
  VertexSet(int universe, std::vector<Vertex> members);

  static VertexSet All(int universe);

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  std::span<const Vertex> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](int i) const { return members_[i]; }

  bool contains(Vertex v) const;
  bool IsSubsetOf(const VertexSet& other) const;

  VertexSet With(Vertex v) const;
  VertexSet Without(Vertex v) const;
  VertexSet Union(const VertexSet& other) const;

  // "{0,3,5}"
  std::string ToString() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }
  // Lexicographic on the sorted member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.members_ < b.members_;
  }

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
};

}  // namespace drs

#endif  // DRS_VERTEX_SET_H_
