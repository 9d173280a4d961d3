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

#include "drs/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "drs/error.h"
#include "json.hpp"

namespace drs {
namespace {

using nlohmann::json;

constexpr int kMaxOrder = 1 << 20;

[[noreturn]] void ParseFail(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

// Splits on blanks; std::string_view tokens into `text`.
std::vector<std::string_view> Tokens(std::string_view text) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' &&
           text[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

int ParseIndex(std::string_view token, int line) {
  int value = 0;
  auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || value < 0) {
    ParseFail(line, "expected a non-negative integer, got '" +
                        std::string(token) + "'");
  }
  if (value >= kMaxOrder) ParseFail(line, "vertex index too large");
  return value;
}

Graph Build(int declared_n, int max_index, const std::vector<Edge>& edges) {
  int n = declared_n >= 0 ? declared_n : max_index + 1;
  if (n < 1) throw Error(ErrorCode::kParse, "graph has no vertices");
  return Graph::FromEdges(n, edges);
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int declared_n = -1;
  int max_index = -1;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) ParseFail(line_no, "header must be 'n <count>'");
      if (declared_n >= 0) ParseFail(line_no, "repeated 'n' header");
      if (!edges.empty()) ParseFail(line_no, "'n' header after edges");
      declared_n = ParseIndex(tokens[1], line_no);
      if (declared_n < 1) ParseFail(line_no, "order must be at least 1");
      continue;
    }
    if (tokens.size() != 2) {
      ParseFail(line_no, "expected two vertex indices per line");
    }
    const int u = ParseIndex(tokens[0], line_no);
    const int v = ParseIndex(tokens[1], line_no);
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
      ParseFail(line_no, "vertex index out of range 0.." +
                             std::to_string(declared_n - 1));
    }
    if (u == v) ParseFail(line_no, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      ParseFail(line_no, "duplicate edge " + std::to_string(u) + "-" +
                             std::to_string(v));
    }
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  return Build(declared_n, max_index, edges);
}

Graph ParseGraphJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw Error(ErrorCode::kParse,
                "JSON graph must be an object with an \"edges\" array");
  }
  int declared_n = -1;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1 ||
        doc["n"].get<long long>() >= kMaxOrder) {
      throw Error(ErrorCode::kParse, "\"n\" must be a positive integer");
    }
    declared_n = doc["n"].get<int>();
  }
  std::vector<Edge> edges;
  int max_index = -1;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw Error(ErrorCode::kParse, "each edge must be a [u, v] pair");
    }
    const long long u = e[0].get<long long>();
    const long long v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= kMaxOrder || v >= kMaxOrder ||
        (declared_n >= 0 && (u >= declared_n || v >= declared_n))) {
      throw Error(ErrorCode::kParse, "vertex index out of range in edge [" +
                                         std::to_string(u) + ", " +
                                         std::to_string(v) + "]");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_index = std::max({max_index, static_cast<int>(u), static_cast<int>(v)});
  }
  return Build(declared_n, max_index, edges);
}

Graph ParseGraph(std::string_view text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return ParseGraphJson(text);
  }
  return ParseEdgeList(text);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::string SerializeEdgeList(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string SerializeGraphJson(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.order()}, {"edges", edges}}.dump();
}

}  // namespace drs
