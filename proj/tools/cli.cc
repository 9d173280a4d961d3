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

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "drs/conformance.h"
#include "drs/constructive.h"
#include "drs/distance.h"
#include "drs/error.h"
#include "drs/families.h"
#include "drs/graph_io.h"
#include "drs/resolve.h"
#include "drs/solver.h"
#include "drs/structure.h"
#include "json.hpp"

namespace drs::cli {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kDisconnected:
      return kExitDisconnected;
    case ErrorCode::kOverCap:
      return kExitOverCap;
    case ErrorCode::kNotApplicable:
      return kExitNotApplicable;
  }
  return kExitUsage;
}

json ToJson(const VertexSet& w) {
  return json(std::vector<Vertex>(w.begin(), w.end()));
}

// A loaded, connected input graph and its summary block.
struct Input {
  Graph graph;
  DistanceMatrix distances;
  json summary;
};

Input Load(const std::string& path) {
  Input in;
  in.graph = ReadGraphFile(path);
  in.distances = AllPairsShortestPaths(in.graph);
  in.summary = {{"path", path},
                {"n", in.graph.order()},
                {"edges", in.graph.size()},
                {"diameter", in.distances.diameter()},
                {"leaves", Leaves(in.graph).size()}};
  return in;
}

int SolverCap(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DRS_CAP")) {
    try {
      size_t used = 0;
      const int cap = std::stoi(env, &used);
      if (used == std::string(env).size() && cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::kInvalidArgument,
                std::string("DRS_CAP must be a positive integer, got '") +
                    env + "'");
  }
  return kDefaultSolverCap;
}

std::vector<Vertex> ParseSetList(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad vertex '" + item + "' in --set");
    }
    out.push_back(v);
  }
  return out;
}

json SolveJson(const SolveResult& s) {
  return {{"psi", s.psi},
          {"witness", ToJson(s.witness)},
          {"lower_bound",
           {{"value", s.lower.value},
            {"source", LowerBoundSourceName(s.lower.source)}}},
          {"upper_bound",
           {{"value", s.upper.value},
            {"source", UpperBoundSourceName(s.upper.source)},
            {"witness", ToJson(s.upper.witness)}}},
          {"certificate", CertificateName(s.certificate)},
          {"candidates_examined", s.candidates_examined}};
}

json FamilyJson(const FamilyDescriptor& f) {
  json out = {{"family", f.ToString()}, {"kind", FamilyKindName(f.kind)},
              {"n", f.n}};
  switch (f.kind) {
    case FamilyKind::kCompleteBipartite:
      out["r"] = f.r;
      out["s"] = f.s;
      break;
    case FamilyKind::kJoinK2Empty:
      out["m"] = f.m;
      break;
    case FamilyKind::kTree:
      out["leaves"] = f.leaves;
      break;
    case FamilyKind::kUnicyclic:
      out["cycle_length"] = f.m;
      out["leaves"] = f.leaves;
      break;
    default:
      break;
  }
  try {
    const PsiInterval psi = ClosedFormPsi(f);
    if (psi.exact()) {
      out["psi"] = psi.lo;
    } else {
      out["psi_interval"] = {psi.lo, psi.hi};
    }
  } catch (const Error&) {
    out["psi"] = nullptr;
  }
  return out;
}

struct Outcome {
  int exit_code = kExitOk;
  json result;
};

Outcome Psi(const Input& in, int cap) {
  return {kExitOk, SolveJson(SolvePsi(in.graph, {.cap = cap}))};
}

Outcome Verify(const Input& in, const std::string& set_text) {
  const VertexSet w(in.graph.order(), ParseSetList(set_text));
  const Verdict verdict = CheckDoublyResolving(in.distances, w);
  json result = {{"set", ToJson(w)},
                 {"doubly_resolving", verdict.doubly_resolving}};
  if (verdict.witness) {
    result["witness"] = {{"u", verdict.witness->u},
                         {"v", verdict.witness->v},
                         {"difference", verdict.witness->difference}};
  }
  return {verdict.doubly_resolving ? kExitOk : kExitNotResolving, result};
}

Outcome Construct(const Input& in, const std::string& method) {
  const Graph& g = in.graph;
  const int l = Leaves(g).size();
  json result = {{"method", method}};
  VertexSet w;
  if (method == "diametral") {
    if (g.order() < 2) {
      throw Error(ErrorCode::kNotApplicable,
                  "diametral construction needs at least two vertices");
    }
    w = ConstructDiametral(g, in.distances);
    result["bound"] = {{"rule", "n-diam+1"},
                       {"value", g.order() - in.distances.diameter() + 1}};
  } else if (method == "tree") {
    w = ConstructTreeBasis(g);
    result["bound"] = {{"rule", "l(G)"}, {"value", l}};
  } else {
    const CycleStructure cycle = FindCycle(g);
    const CycleBasis basis = CycleBasisPreferringBranchVertices(g, cycle);
    w = ConstructUnicyclic(g);
    const bool odd = cycle.length() % 2 == 1;
    result["bound"] = {{"rule", odd ? "l(G)+1" : "l(G)+2"},
                       {"value", l + (odd ? 1 : 2)}};
    result["cycle_length"] = cycle.length();
    result["cycle_basis"] = ToJson(basis.basis);
    result["degree_two"] = ToJson(basis.degree_two);
  }
  result["set"] = ToJson(w);
  result["size"] = w.size();
  result["verified"] = w.size() >= 2 && IsDoublyResolvingSet(in.distances, w);
  return {kExitOk, result};
}

Outcome Family(const Input& in) {
  json families = json::array();
  for (const auto& f : Recognize(in.graph)) families.push_back(FamilyJson(f));
  return {kExitOk, {{"families", families}}};
}

Outcome ClassifyN1(const Input& in) {
  const auto family = ClassifyNMinus1(in.graph);
  json result = {{"psi_equals_n_minus_1", family.has_value()}};
  result["family"] = family ? json(family->ToString()) : json(nullptr);
  return {kExitOk, result};
}

Outcome Conformance(std::uint64_t seed, int count, int max_n, int cap) {
  conformance::Options options{
      .seed = seed, .count = count, .max_n = max_n, .solver_cap = cap};
  const conformance::Report report = conformance::Run(options);
  json properties = json::array();
  for (const auto& p : report.properties) {
    json entry = {{"name", p.name},
                  {"status", conformance::StatusName(p.status)},
                  {"checked", p.checked},
                  {"passed", p.passed}};
    if (!p.skip_reason.empty()) entry["skip_reason"] = p.skip_reason;
    if (p.counterexample) {
      entry["counterexample"] = {{"case", p.counterexample->case_index},
                                 {"edge_list", p.counterexample->edge_list},
                                 {"detail", p.counterexample->detail}};
    }
    properties.push_back(entry);
  }
  return {report.AllPassed() ? kExitOk : kExitConformanceFailure,
          {{"cases", report.cases},
           {"all_passed", report.AllPassed()},
           {"properties", properties}}};
}

void Flatten(const json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      Flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (node.is_array() &&
             std::any_of(node.begin(), node.end(),
                         [](const json& x) { return x.is_structured(); })) {
    for (size_t i = 0; i < node.size(); ++i) {
      Flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (node.is_string()) {
    // Multi-line strings (counterexample edge lists) stay readable.
    std::string text = node.get<std::string>();
    if (text.find('\n') == std::string::npos) {
      out << prefix << ": " << text << "\n";
    } else {
      out << prefix << ":\n" << text;
      if (text.back() != '\n') out << "\n";
    }
  } else {
    out << prefix << ": " << node.dump() << "\n";
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Doubly resolving sets: exact psi, verification, constructions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "Include elapsed time in the report");

  std::string path;
  std::optional<int> cap;
  std::string set_text;
  std::string method;
  std::uint64_t seed = 1;
  int count = 100;
  int max_n = 8;

  auto* psi = app.add_subcommand("psi", "Exact doubly resolving number");
  psi->add_option("file", path, "Graph file")->required();
  psi->add_option("--cap", cap, "Largest order the solver accepts")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check a doubly resolving set");
  verify->add_option("file", path, "Graph file")->required();
  verify->add_option("--set", set_text, "Comma-separated vertices")
      ->required();

  auto* construct =
      app.add_subcommand("construct", "Build a doubly resolving set");
  construct->add_option("file", path, "Graph file")->required();
  construct->add_option("--method", method, "Construction")
      ->required()
      ->check(CLI::IsMember({"diametral", "tree", "unicyclic"}));

  auto* family = app.add_subcommand("family", "Recognize named families");
  family->add_option("file", path, "Graph file")->required();

  auto* classify =
      app.add_subcommand("classify-n1", "Test whether psi(G) = n - 1");
  classify->add_option("file", path, "Graph file")->required();

  auto* conf = app.add_subcommand("conformance", "Randomized property check");
  conf->add_option("--seed", seed, "Random seed");
  conf->add_option("--count", count, "Number of cases")
      ->check(CLI::NonNegativeNumber);
  conf->add_option("--max-n", max_n, "Largest generated order")
      ->check(CLI::Range(3, 1000));
  conf->add_option("--cap", cap, "Solver cap")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json report = {{"schema", kSchemaVersion}};
  Outcome outcome;
  try {
    CLI::App* cmd = app.get_subcommands().front();
    report["command"] = cmd->get_name();
    if (cmd == conf) {
      report["arguments"] = {{"seed", seed}, {"count", count}, {"max_n", max_n}};
      outcome = Conformance(seed, count, max_n, SolverCap(cap));
    } else {
      const Input in = Load(path);
      report["input"] = in.summary;
      if (cmd == psi) {
        const int c = SolverCap(cap);
        report["arguments"] = {{"cap", c}};
        outcome = Psi(in, c);
      } else if (cmd == verify) {
        report["arguments"] = {{"set", set_text}};
        outcome = Verify(in, set_text);
      } else if (cmd == construct) {
        report["arguments"] = {{"method", method}};
        outcome = Construct(in, method);
      } else if (cmd == family) {
        outcome = Family(in);
      } else {
        outcome = ClassifyN1(in);
      }
    }
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  report["result"] = outcome.result;
  if (timing) {
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
  }

  if (format == "text") {
    Flatten(report, "", out);
  } else {
    out << report.dump(2) << "\n";
  }
  return outcome.exit_code;
}

}  // namespace drs::cli
