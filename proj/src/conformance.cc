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

#include "drs/conformance.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "drs/constructive.h"
#include "drs/error.h"
#include "drs/families.h"
#include "drs/generators.h"
#include "drs/graph_io.h"
#include "drs/oracle.h"
#include "drs/resolve.h"

namespace drs::conformance {
namespace {

using Failure = std::optional<std::string>;

std::string Describe(const VertexSet& w) { return w.ToString(); }

Failure Fail(std::string what) { return Failure(std::move(what)); }

bool HasSolver(const CaseData& c) { return c.solved.has_value(); }

bool NonCycleUnicyclic(const Graph& g) {
  return IsUnicyclic(g) && FindCycle(g).length() < g.order();
}

Failure CheckDiametral(const CaseData& c) {
  const int n = c.graph.order();
  const int d = c.distances.diameter();
  const VertexSet w = ConstructDiametral(c.graph, c.distances);
  if (w.size() != n - d + 1) {
    return Fail("diametral set " + Describe(w) + " has size " +
                std::to_string(w.size()) + ", expected n-diam+1 = " +
                std::to_string(n - d + 1));
  }
  if (!IsDoublyResolvingSet(c.distances, w)) {
    return Fail("diametral set " + Describe(w) + " is not doubly resolving");
  }
  if (d >= 2 && w.size() > n - 1) {
    return Fail("diametral set larger than n-1");
  }
  return std::nullopt;
}

Failure CheckBoundConsistency(const CaseData& c) {
  const LowerBound lb = ComputeLowerBound(c.graph, c.twins);
  const UpperBound ub = ComputeUpperBound(c.graph, c.distances);
  if (lb.value > ub.value) {
    return Fail("lower bound " + std::to_string(lb.value) + " (" +
                LowerBoundSourceName(lb.source) + ") exceeds upper bound " +
                std::to_string(ub.value));
  }
  const int n = c.graph.order();
  if (ub.value > std::min(n - 1, n - c.distances.diameter() + 1)) {
    return Fail("upper bound " + std::to_string(ub.value) +
                " above min(n-1, n-diam+1)");
  }
  if (!IsDoublyResolvingSet(c.distances, ub.witness)) {
    return Fail("upper bound witness does not verify");
  }
  return std::nullopt;
}

Failure CheckPsiBounds(const CaseData& c) {
  const int n = c.graph.order();
  const SolveResult& s = *c.solved;
  if (s.psi < 2) return Fail("psi below 2");
  if (n >= 3 && s.psi > n - 1) {
    return Fail("psi = " + std::to_string(s.psi) + " exceeds n-1");
  }
  if (s.psi > n - c.distances.diameter() + 1) {
    return Fail("psi = " + std::to_string(s.psi) + " exceeds n-diam+1 = " +
                std::to_string(n - c.distances.diameter() + 1));
  }
  if (s.lower.value > s.psi || s.psi > s.upper.value) {
    return Fail("psi outside its own bounds");
  }
  if (s.witness.size() != s.psi ||
      !IsDoublyResolvingSet(c.distances, s.witness)) {
    return Fail("solver witness " + Describe(s.witness) + " does not verify");
  }
  return std::nullopt;
}

Failure CheckOracleAgreement(const CaseData& c) {
  const SolveResult brute = oracle::BruteForcePsi(c.graph);
  if (brute.psi != c.solved->psi || !(brute.witness == c.solved->witness)) {
    return Fail("solver psi=" + std::to_string(c.solved->psi) + " " +
                Describe(c.solved->witness) + " vs oracle psi=" +
                std::to_string(brute.psi) + " " + Describe(brute.witness));
  }
  return std::nullopt;
}

Failure CheckLeafForcing(const CaseData& c) {
  const VertexSet& w = c.solved->witness;
  for (Vertex leaf : Leaves(c.graph)) {
    if (!w.contains(leaf)) {
      return Fail("minimum set " + Describe(w) + " omits leaf " +
                  std::to_string(leaf));
    }
    const VertexSet dropped = w.Without(leaf);
    if (dropped.size() >= 2 && IsDoublyResolvingSet(c.distances, dropped)) {
      return Fail("dropping leaf " + std::to_string(leaf) +
                  " still leaves a doubly resolving set");
    }
  }
  return std::nullopt;
}

Failure CheckTwinForcing(const CaseData& c) {
  const VertexSet& w = c.solved->witness;
  if (!c.twins.mixed_pairs.empty()) return Fail("mixed twin pair reported");
  for (const auto& cls : c.twins.classes) {
    const auto missing = std::count_if(
        cls.members.begin(), cls.members.end(),
        [&](Vertex v) { return !w.contains(v); });
    if (missing > 1) {
      return Fail("minimum set " + Describe(w) + " omits two twins of class " +
                  std::to_string(cls.members.front()));
    }
    for (Vertex u : cls.members) {
      for (Vertex v : cls.members) {
        for (Vertex x = 0; x < c.graph.order(); ++x) {
          if (x != u && x != v && c.distances(u, x) != c.distances(v, x)) {
            return Fail("twins " + std::to_string(u) + "," +
                        std::to_string(v) + " differ in distance to " +
                        std::to_string(x));
          }
        }
      }
    }
  }
  return std::nullopt;
}

Failure CheckTwinSwap(const CaseData& c) {
  const VertexSet& w = c.solved->witness;
  for (const auto& cls : c.twins.classes) {
    for (Vertex u : cls.members) {
      for (Vertex v : cls.members) {
        if (!w.contains(u) || w.contains(v)) continue;
        const VertexSet swapped = w.Without(u).With(v);
        if (!IsDoublyResolvingSet(c.distances, swapped)) {
          return Fail("swapping twin " + std::to_string(u) + " for " +
                      std::to_string(v) + " breaks " + Describe(w));
        }
      }
    }
  }
  return std::nullopt;
}

Failure CheckClosedForms(const CaseData& c) {
  for (const FamilyDescriptor& f : Recognize(c.graph)) {
    PsiInterval expected;
    try {
      expected = ClosedFormPsi(f);
    } catch (const Error&) {
      continue;
    }
    if (!expected.Contains(c.solved->psi)) {
      return Fail(f.ToString() + " predicts " + expected.ToString() +
                  ", solver found " + std::to_string(c.solved->psi));
    }
  }
  return std::nullopt;
}

Failure CheckCharacterization(const CaseData& c) {
  const auto family = ClassifyNMinus1(c.graph);
  const bool at_max = c.solved->psi == c.graph.order() - 1;
  if (family.has_value() != at_max) {
    return Fail(std::string("classifier says ") +
                (family ? family->ToString() : "none") + ", solver psi=" +
                std::to_string(c.solved->psi));
  }
  return std::nullopt;
}

Failure CheckTreeUniqueness(const CaseData& c) {
  const auto sets = oracle::AllMinimumSets(c.graph);
  const VertexSet leaves = ConstructTreeBasis(c.graph);
  if (sets.size() != 1 || !(sets.front() == leaves)) {
    return Fail("tree has " + std::to_string(sets.size()) +
                " minimum sets; first " + Describe(sets.front()) +
                ", leaves " + Describe(leaves));
  }
  return std::nullopt;
}

Failure CheckUnicyclicSandwich(const CaseData& c) {
  const CycleStructure cycle = FindCycle(c.graph);
  const int l = Leaves(c.graph).size();
  const int slack = cycle.length() % 2 == 1 ? 1 : 2;
  const int psi = c.solved->psi;
  if (psi < l || psi > l + slack) {
    return Fail("psi = " + std::to_string(psi) + " outside [" +
                std::to_string(l) + "," + std::to_string(l + slack) + "]");
  }
  const VertexSet w = ConstructUnicyclic(c.graph);
  if (w.size() > l + slack || !IsDoublyResolvingSet(c.distances, w)) {
    return Fail("unicyclic construction " + Describe(w) + " invalid");
  }
  const CycleBasis basis = CycleBasisPreferringBranchVertices(c.graph, cycle);
  if (basis.degree_two.empty() && psi != l) {
    return Fail("cycle basis of branch vertices " + Describe(basis.basis) +
                " but psi = " + std::to_string(psi) + " != l = " +
                std::to_string(l));
  }
  return std::nullopt;
}

Graph Relabel(const Graph& g, Rng& rng) {
  const int n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[UniformInt(rng, 0, i)]);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::FromEdges(n, edges);
}

Graph FamilyInstance(int n, Rng& rng) {
  switch (UniformInt(rng, 0, 5)) {
    case 0:
      return PathGraph(n);
    case 1:
      return CycleGraph(n);
    case 2:
      return CompleteGraph(n);
    case 3: {
      const int r = UniformInt(rng, 1, n / 2);
      return CompleteBipartiteGraph(r, n - r);
    }
    case 4:
      return StarGraph(n);
    default:
      return JoinK2EmptyGraph(n - 2);
  }
}

}  // namespace

CaseData Prepare(const Graph& g, bool with_solver) {
  CaseData c{.graph = g,
             .distances = AllPairsShortestPaths(g),
             .twins = ComputeTwinPartition(g),
             .solved = std::nullopt};
  if (with_solver) {
    c.solved = SolvePsi(g, {.cap = std::max(g.order(), kDefaultSolverCap)});
  }
  return c;
}

std::vector<Property> StandardProperties() {
  auto always = [](const CaseData&) { return true; };
  auto at_least_three = [](const CaseData& c) {
    return c.graph.order() >= 3;
  };
  auto with_twins = [](const CaseData& c) {
    return HasSolver(c) && !c.twins.classes.empty();
  };
  return {
      {"diametral-construction", Requirement::kNone, always, CheckDiametral},
      {"bound-consistency", Requirement::kNone, at_least_three,
       CheckBoundConsistency},
      {"psi-bounds", Requirement::kSolver, always, CheckPsiBounds},
      {"oracle-agreement", Requirement::kOracle, always, CheckOracleAgreement},
      {"leaf-forcing", Requirement::kSolver, always, CheckLeafForcing},
      {"twin-forcing", Requirement::kSolver, with_twins, CheckTwinForcing},
      {"twin-swap", Requirement::kSolver, with_twins, CheckTwinSwap},
      {"closed-form", Requirement::kSolver, always, CheckClosedForms},
      {"characterization", Requirement::kSolver, at_least_three,
       CheckCharacterization},
      {"tree-uniqueness", Requirement::kOracle,
       [](const CaseData& c) { return IsTree(c.graph); }, CheckTreeUniqueness},
      {"unicyclic-sandwich", Requirement::kSolver,
       [](const CaseData& c) { return NonCycleUnicyclic(c.graph); },
       CheckUnicyclicSandwich},
  };
}

const char* StatusName(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
  }
  return "unknown";
}

bool Report::AllPassed() const {
  return std::none_of(properties.begin(), properties.end(),
                      [](const PropertyOutcome& p) {
                        return p.status == Status::kFail;
                      });
}

Graph CaseGraph(std::uint64_t seed, int index, int max_n) {
  Rng rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(index));
  const int n = UniformInt(rng, 3, max_n);
  Graph g;
  switch (index % 4) {
    case 0:
      g = RandomConnected(n, 0.15 + 0.65 * UniformUnit(rng), rng);
      break;
    case 1:
      g = RandomTree(n, rng);
      break;
    case 2:
      g = RandomUnicyclic(n, rng);
      break;
    default:
      g = FamilyInstance(n, rng);
      break;
  }
  return Relabel(g, rng);
}

Graph Shrink(const Graph& g, const std::function<bool(const Graph&)>& fails) {
  Graph current = g;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v = 0; v < current.order() && current.order() > 2; ++v) {
      Graph smaller = current.WithoutVertex(v);
      if (IsConnected(smaller) && fails(smaller)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (auto [u, v] : current.edges()) {
      Graph smaller = current.WithoutEdge(u, v);
      if (IsConnected(smaller) && fails(smaller)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return current;
}

Report Run(const Options& options, const std::vector<Property>& properties) {
  if (options.count < 0 || options.max_n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "conformance needs count >= 0 and max_n >= 3");
  }
  Report report;
  report.options = options;
  report.cases = options.count;

  std::vector<bool> active(properties.size(), true);
  bool need_solver = false;
  for (size_t i = 0; i < properties.size(); ++i) {
    PropertyOutcome out;
    out.name = properties[i].name;
    const Requirement req = properties[i].requirement;
    if (req == Requirement::kOracle && options.max_n > oracle::kOracleCap) {
      out.status = Status::kSkipped;
      out.skip_reason = "max_n above oracle cap " +
                        std::to_string(oracle::kOracleCap);
    } else if (req != Requirement::kNone &&
               options.max_n > options.solver_cap) {
      out.status = Status::kSkipped;
      out.skip_reason =
          "max_n above solver cap " + std::to_string(options.solver_cap);
    }
    active[i] = out.status != Status::kSkipped;
    need_solver |= active[i] && req != Requirement::kNone;
    report.properties.push_back(std::move(out));
  }

  for (int index = 0; index < options.count; ++index) {
    const Graph g = CaseGraph(options.seed, index, options.max_n);
    const CaseData data = Prepare(g, need_solver);
    for (size_t i = 0; i < properties.size(); ++i) {
      if (!active[i]) continue;
      const Property& prop = properties[i];
      if (!prop.applies(data)) continue;
      PropertyOutcome& out = report.properties[i];
      ++out.checked;
      Failure failure = prop.check(data);
      if (!failure) {
        ++out.passed;
        continue;
      }
      if (out.status == Status::kFail) continue;
      out.status = Status::kFail;
      auto fails = [&](const Graph& h) {
        try {
          const CaseData d = Prepare(h, need_solver);
          return prop.applies(d) && prop.check(d).has_value();
        } catch (const Error&) {
          return false;
        }
      };
      const Graph small = Shrink(g, fails);
      const CaseData small_data = Prepare(small, need_solver);
      out.counterexample = Counterexample{
          .case_index = index,
          .edge_list = SerializeEdgeList(small),
          .detail = prop.check(small_data).value_or(*failure)};
    }
  }
  return report;
}

}  // namespace drs::conformance
