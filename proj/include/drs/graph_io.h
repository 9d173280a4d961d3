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

// Graph file formats.
//
// Edge list: one edge per line as two whitespace-separated non-negative
// integers. Blank lines and lines starting with '#' are ignored. An optional
// header line "n <count>" fixes the order (so isolated vertices can be
// declared); without it the order is the largest index plus one.
//
// JSON: {"n": <count>, "edges": [[u, v], ...]}; "n" may be omitted.
//
// Vertex labels are the integers in the file; they are used directly as the
// dense indices, so serializing a parsed graph reproduces its labels.

#ifndef DRS_GRAPH_IO_H_
#define DRS_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "drs/graph.h"

namespace drs {

// All parse failures throw Error(kParse); edge-list messages carry the
// 1-based line number.
Graph ParseEdgeList(std::string_view text);
Graph ParseGraphJson(std::string_view text);
// JSON when the first non-blank character is '{', edge list otherwise.
Graph ParseGraph(std::string_view text);
Graph ReadGraphFile(const std::string& path);

// "n <count>" followed by the sorted edges, one per line.
std::string SerializeEdgeList(const Graph& g);
std::string SerializeGraphJson(const Graph& g);

}  // namespace drs

#endif  // DRS_GRAPH_IO_H_
