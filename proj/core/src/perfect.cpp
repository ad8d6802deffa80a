#include "ggx/perfect.hpp"

#include <algorithm>
#include <set>

#include "ggx/error.hpp"
#include "ggx/groups.hpp"

namespace ggx {

namespace {

constexpr const char* kModule = "perfect";

// Is alive ∩ N(v) a clique?
bool simplicial(const Graph& g, Vertex v, const Bitset& alive) {
  Bitset around = Bitset::from_bits(g.row(v), g.vertex_count());
  around &= alive.bits();
  bool clique = true;
  around.for_each([&](std::size_t u) {
    if (!clique) return;
    Bitset rest = around;
    rest.reset(u);
    if (!is_subset(rest.bits(), g.row(static_cast<Vertex>(u)))) clique = false;
  });
  return clique;
}

}  // namespace

std::string to_string(PerfectStatus status) {
  switch (status) {
    case PerfectStatus::kPerfect:
      return "perfect";
    case PerfectStatus::kImperfect:
      return "imperfect";
    case PerfectStatus::kUnknown:
      break;
  }
  return "unknown";
}

CliqueReduction clique_neighborhood_reduction(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Bitset alive(n, true);
  std::set<Vertex> pending;
  for (Vertex v = 0; v < n; ++v) pending.insert(v);
  CliqueReduction out;
  while (!pending.empty()) {
    const Vertex v = *pending.begin();
    pending.erase(pending.begin());
    if (!alive.test(v) || !simplicial(g, v, alive)) continue;
    alive.reset(v);
    out.removed.push_back(v);
    // Only former neighbors can have become simplicial.
    for_each_bit(g.row(v), [&](std::size_t u) {
      if (alive.test(u)) pending.insert(static_cast<Vertex>(u));
    });
  }
  out.kept = alive.to_indices();
  out.graph = induced_subgraph(g, out.kept);
  return out;
}

std::optional<std::string> audit_removal_log(const Graph& g, std::span<const Vertex> removed) {
  Bitset alive(g.vertex_count(), true);
  for (const Vertex v : removed) {
    if (v >= g.vertex_count()) return "vertex " + std::to_string(v) + " out of range";
    if (!alive.test(v)) return "vertex " + std::to_string(v) + " removed twice";
    if (!simplicial(g, v, alive)) return "vertex " + std::to_string(v) + " had a non-clique neighborhood";
    alive.reset(v);
  }
  return std::nullopt;
}

PerfectnessVerdict perfectness_verdict(const Graph& g, const PerfectnessOptions& options) {
  PerfectnessVerdict verdict;
  verdict.trace.push_back({"input", g.vertex_count()});

  // Every step keeps the Berge verdict; origin maps current vertices to g.
  Graph current = g;
  std::vector<Vertex> origin(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) origin[v] = v;
  for (;;) {
    const std::size_t before = current.vertex_count();

    auto [quotient, map] = twin_quotient(current);
    std::vector<Vertex> next_origin;
    for (const Vertex rep : map.representatives) next_origin.push_back(origin[rep]);
    verdict.trace.push_back({"twin-quotient", quotient.vertex_count()});

    auto reduced = clique_neighborhood_reduction(quotient);
    origin.clear();
    for (const Vertex v : reduced.kept) origin.push_back(next_origin[v]);
    verdict.trace.push_back({"clique-neighborhood-removal", reduced.graph.vertex_count()});

    // A universal vertex has no non-neighbor on any hole or antihole.
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < reduced.graph.vertex_count(); ++v) {
      if (reduced.graph.degree(v) + 1 != reduced.graph.vertex_count()) keep.push_back(v);
    }
    current = induced_subgraph(reduced.graph, keep);
    next_origin.clear();
    for (const Vertex v : keep) next_origin.push_back(origin[v]);
    origin = std::move(next_origin);
    verdict.trace.push_back({"universal-vertex-removal", current.vertex_count()});

    if (current.vertex_count() == before || current.vertex_count() == 0) break;
  }

  // Holes and antiholes are 2-connected and contain odd cycles, so each lies
  // inside one non-bipartite block.
  std::vector<Graph> blocks;
  std::vector<std::vector<Vertex>> block_vertices;
  std::size_t searched = 0;
  for (auto& block : biconnected_components(current)) {
    if (block.size() < 5) continue;
    Graph sub = induced_subgraph(current, block);
    if (is_bipartite(sub)) continue;
    searched += block.size();
    blocks.push_back(std::move(sub));
    block_vertices.push_back(std::move(block));
  }
  verdict.trace.push_back({"non-bipartite-blocks", searched});

  verdict.status = PerfectStatus::kPerfect;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    BergeOptions berge;
    berge.budget = options.budget - verdict.budget_spent;
    berge.jobs = options.jobs;
    berge.antihole_min_length = options.antihole_min_length;
    const auto result = is_berge(blocks[b], berge);
    verdict.budget_spent += result.steps;
    if (result.verdict == BergeVerdict::kNotBerge) {
      HoleWitness lifted{result.witness->kind, {}};
      for (const Vertex v : result.witness->vertices) lifted.vertices.push_back(origin[block_vertices[b][v]]);
      if (const auto problem = validate_witness(g, lifted)) {
        throw Error(kModule, ErrorCode::kPreconditionViolated, "lifted witness failed validation: " + *problem);
      }
      verdict.status = PerfectStatus::kImperfect;
      verdict.witness = std::move(lifted);
      verdict.exhausted.reset();
      return verdict;
    }
    if (result.verdict == BergeVerdict::kUnknown) {
      verdict.status = PerfectStatus::kUnknown;
      verdict.exhausted = result.exhausted;
      if (verdict.budget_spent >= options.budget) return verdict;
    }
  }
  return verdict;
}

ConditionReport sufficient_condition_check(const FiniteGroup& group) {
  ConditionReport report;
  report.primes = group.primes();
  report.nilpotent = true;
  std::size_t lacking = 0;
  for (const auto& record : sylow_report(group).records) {
    report.per_prime.push_back({record.prime, record.unique, record.cyclic});
    if (!(record.unique && record.cyclic)) ++lacking;
    if (!record.unique) report.nilpotent = false;
    if (!record.cyclic) ++report.non_cyclic_sylow_count;
  }
  report.holds = lacking <= 2;
  return report;
}

NilpotentReport nilpotent_report(const FiniteGroup& group) {
  const auto condition = sufficient_condition_check(group);
  NilpotentReport report;
  report.nilpotent = condition.nilpotent;
  report.non_cyclic_sylow_count = condition.non_cyclic_sylow_count;
  if (report.nilpotent) report.predicted_perfect = report.non_cyclic_sylow_count <= 2;
  return report;
}

bool witness_check(const FiniteGroup& group, std::span<const Element> cycle, std::size_t expected_length) {
  const std::size_t k = cycle.size();
  if (k != expected_length || k < 5 || k % 2 == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (is_cyclic_pair(group, cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool witness_check(const FiniteGroup& group, std::span<const std::string> labels, std::size_t expected_length) {
  std::vector<Element> cycle;
  cycle.reserve(labels.size());
  for (const auto& label : labels) {
    const auto x = group.find(label);
    if (!x) throw Error(kModule, ErrorCode::kBadLabel, "no element labelled '" + label + "' in " + group.name());
    cycle.push_back(*x);
  }
  return witness_check(group, cycle, expected_length);
}

}  // namespace ggx
