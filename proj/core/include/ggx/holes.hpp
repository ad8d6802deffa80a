#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggx/graph.hpp"

namespace ggx {

enum class HoleKind { kHole, kAntihole };

std::string to_string(HoleKind kind);

// An odd induced cycle (length >= 5) of a graph or of its complement.
struct HoleWitness {
  HoleKind kind = HoleKind::kHole;
  std::vector<Vertex> vertices;  // cyclic order
  bool operator==(const HoleWitness&) const = default;
};

// Checks the witness against g itself: odd length >= 5, consecutive vertices
// adjacent and others non-adjacent (in g for holes, in complement(g) for
// antiholes). Returns a reason on failure.
std::optional<std::string> validate_witness(const Graph& g, const HoleWitness& witness);

inline constexpr std::uint64_t kDefaultHoleBudget = 100'000'000;

struct HoleSearchOptions {
  std::size_t min_length = 5;  // odd, >= 5
  std::uint64_t budget = kDefaultHoleBudget;
  unsigned jobs = 1;
};

enum class SearchStatus { kFound, kNone, kBudgetExhausted };

struct HoleSearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::vector<Vertex> cycle;  // set iff kFound
  std::uint64_t steps = 0;    // path-extension steps spent
};

// Exhaustive DFS over induced paths whose first vertex is the smallest on the
// cycle. The reported cycle belongs to the lowest start vertex that has one,
// so the result does not depend on `jobs`.
HoleSearchResult find_odd_hole(const Graph& g, const HoleSearchOptions& options = {});

enum class BergeVerdict { kBerge, kNotBerge, kUnknown };

std::string to_string(BergeVerdict verdict);

struct BergeOptions {
  std::uint64_t budget = kDefaultHoleBudget;  // shared by both searches
  unsigned jobs = 1;
  std::size_t hole_min_length = 5;
  // C̄5 is itself a 5-cycle, so the hole search already covers it.
  std::size_t antihole_min_length = 7;
};

struct BergeResult {
  BergeVerdict verdict = BergeVerdict::kUnknown;
  std::optional<HoleWitness> witness;
  std::optional<HoleKind> exhausted;  // the search that ran out of budget
  std::uint64_t steps = 0;
};

BergeResult is_berge(const Graph& g, const BergeOptions& options = {});

}  // namespace ggx
