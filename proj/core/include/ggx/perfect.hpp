#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggx/finite_group.hpp"
#include "ggx/graph.hpp"
#include "ggx/holes.hpp"

namespace ggx {

enum class PerfectStatus { kPerfect, kImperfect, kUnknown };

std::string to_string(PerfectStatus status);

struct ReductionStep {
  std::string step;
  std::size_t vertices = 0;  // vertex count after the step
};

struct PerfectnessOptions {
  std::uint64_t budget = kDefaultHoleBudget;
  unsigned jobs = 1;
  std::size_t antihole_min_length = 7;
};

struct PerfectnessVerdict {
  PerfectStatus status = PerfectStatus::kUnknown;
  std::optional<HoleWitness> witness;  // vertices of the input graph
  std::optional<HoleKind> exhausted;
  std::vector<ReductionStep> trace;
  std::uint64_t budget_spent = 0;
};

// Twin quotient, clique-neighborhood removal and universal-vertex removal,
// repeated until nothing changes; then hole and antihole search on each
// non-bipartite block of at least five vertices.
PerfectnessVerdict perfectness_verdict(const Graph& g, const PerfectnessOptions& options = {});

struct CliqueReduction {
  Graph graph;
  std::vector<Vertex> kept;     // reduced vertex -> input vertex
  std::vector<Vertex> removed;  // input vertices in removal order
};

// Repeatedly drops vertices whose open neighborhood is a clique. The surviving
// set does not depend on the order of removals.
CliqueReduction clique_neighborhood_reduction(const Graph& g);

// Replays a removal log against g: every vertex must have had a clique
// neighborhood among the vertices still present when it was removed.
std::optional<std::string> audit_removal_log(const Graph& g, std::span<const Vertex> removed);

struct SylowCondition {
  std::uint64_t prime = 0;
  bool unique = false;
  bool cyclic = false;
};

struct ConditionReport {
  std::vector<std::uint64_t> primes;
  std::vector<SylowCondition> per_prime;
  bool holds = false;  // at most two primes lack a unique cyclic Sylow subgroup
  bool nilpotent = false;
  std::size_t non_cyclic_sylow_count = 0;
};

ConditionReport sufficient_condition_check(const FiniteGroup& group);

struct NilpotentReport {
  bool nilpotent = false;
  std::size_t non_cyclic_sylow_count = 0;
  std::optional<bool> predicted_perfect;  // only for nilpotent groups
};

NilpotentReport nilpotent_report(const FiniteGroup& group);

// True iff the elements induce a chordless cycle of exactly `expected_length`
// (odd, >= 5) in the enhanced power graph, with each pair decided from the
// group directly.
bool witness_check(const FiniteGroup& group, std::span<const Element> cycle, std::size_t expected_length);
bool witness_check(const FiniteGroup& group, std::span<const std::string> labels, std::size_t expected_length);

}  // namespace ggx
