#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ggx/holes.hpp"

namespace ggx::tools {

// Pinned parameters of the acceptance criteria.
inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::size_t kRelabelingsPerGroup = 10;
inline constexpr std::size_t kDirectedMaxOrder = 2000;
inline constexpr std::size_t kEmbeddingMaxOrder = 1000;
inline constexpr std::size_t kExhaustivePairMaxOrder = 2000;
inline constexpr std::size_t kSampledPairs = 100'000;
inline constexpr std::size_t kRandomGraphs = 10'000;
inline constexpr std::size_t kRandomGraphMaxVertices = 12;
// S8 has 40320 elements, above the default graph cap.
inline constexpr std::size_t kVerdictGraphCap = 50'000;

struct SuiteOptions {
  std::vector<std::string> corpus;
  std::uint64_t budget = kDefaultHoleBudget;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_graphs = kRandomGraphs;
  std::ostream* progress = nullptr;  // per-step notes, optional
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 9;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions& options);

// Criteria making up a named suite: reconstruction, perfectness, embedding,
// reductions, or all.
std::vector<int> suite_criteria(std::string_view suite);

}  // namespace ggx::tools
