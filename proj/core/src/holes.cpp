#include "ggx/holes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

#include "ggx/error.hpp"

namespace ggx {

std::string to_string(HoleKind kind) { return kind == HoleKind::kHole ? "hole" : "antihole"; }

std::string to_string(BergeVerdict verdict) {
  switch (verdict) {
    case BergeVerdict::kBerge:
      return "berge";
    case BergeVerdict::kNotBerge:
      return "not-berge";
    case BergeVerdict::kUnknown:
      break;
  }
  return "unknown";
}

std::optional<std::string> validate_witness(const Graph& g, const HoleWitness& witness) {
  const auto& cycle = witness.vertices;
  const std::size_t k = cycle.size();
  if (k < 5 || k % 2 == 0) return "length " + std::to_string(k) + " is not odd and at least 5";
  for (const Vertex v : cycle) {
    if (v >= g.vertex_count()) return "vertex " + std::to_string(v) + " out of range";
  }
  std::vector<Vertex> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated vertex";
  const bool want_hole = witness.kind == HoleKind::kHole;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      const bool edge = g.adjacent(cycle[i], cycle[j]);
      if ((edge == want_hole) != consecutive) {
        return "pair (" + std::to_string(cycle[i]) + ", " + std::to_string(cycle[j]) + ") breaks the " +
               to_string(witness.kind);
      }
    }
  }
  return std::nullopt;
}

namespace {

constexpr const char* kModule = "graphs";

struct SharedState {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> steps{0};
  std::atomic<bool> exhausted{false};
  std::atomic<std::size_t> best_start{std::numeric_limits<std::size_t>::max()};
};

// Induced-path DFS for cycles whose smallest vertex is a fixed start v0.
// avail_[k] holds the vertices allowed as the successor of path_[k]: above v0,
// outside N̄ of every interior vertex, and outside N̄(v0) unless a closer.
class StartSearch {
 public:
  enum class Outcome { kContinue, kFound, kStop };

  StartSearch(const Graph& g, std::size_t min_length, SharedState& shared)
      : g_(g), n_(g.vertex_count()), words_(words_for(n_)), min_length_(min_length), shared_(shared),
        closers_(words_), upper_(words_), visited_(words_), frontier_(words_), next_(words_), barrier_(words_) {}

  Outcome run(Vertex v0) {
    v0_ = v0;
    std::fill(upper_.begin(), upper_.end(), 0);
    for (std::size_t u = v0 + 1; u < n_; ++u) upper_[u / kWordBits] |= Word{1} << (u % kWordBits);
    const ConstBits r0 = g_.row(v0);
    std::vector<Vertex> firsts;
    for_each_bit(r0, [&](std::size_t a) {
      if (a > v0) firsts.push_back(static_cast<Vertex>(a));
    });
    for (const Vertex a : firsts) {
      const ConstBits ra = g_.row(a);
      bool any_closer = false;
      for (std::size_t w = 0; w < words_; ++w) {
        Word above_a = ~Word{0};
        if (w < a / kWordBits) {
          above_a = 0;
        } else if (w == a / kWordBits) {
          const std::size_t bit = a % kWordBits;
          above_a = bit + 1 == kWordBits ? 0 : ~Word{0} << (bit + 1);
        }
        closers_[w] = r0[w] & upper_[w] & above_a & ~ra[w];
        any_closer |= closers_[w] != 0;
      }
      if (!any_closer) continue;
      level(1);
      auto& avail = avail_[1];
      for (std::size_t w = 0; w < words_; ++w) avail[w] = (upper_[w] & ~r0[w]) | closers_[w];
      avail[a / kWordBits] &= ~(Word{1} << (a % kWordBits));
      path_.assign({v0, a});
      const Outcome out = extend(1);
      if (out != Outcome::kContinue) return out;
    }
    return Outcome::kContinue;
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  std::vector<Word>& level(std::size_t k) {
    while (avail_.size() <= k) avail_.emplace_back(words_);
    return avail_[k];
  }

  bool tick() {
    if (shared_.best_start.load(std::memory_order_relaxed) < v0_) return false;
    if (shared_.steps.fetch_add(1, std::memory_order_relaxed) >= shared_.budget) {
      shared_.exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  // Can a closer still be reached from v through vertices in avail?
  bool closer_reachable(Vertex v, const std::vector<Word>& avail) {
    const ConstBits rv = g_.row(v);
    bool active = false;
    for (std::size_t w = 0; w < words_; ++w) {
      const Word f = rv[w] & avail[w];
      if (f & closers_[w]) return true;
      visited_[w] = f;
      frontier_[w] = f & ~closers_[w];
      barrier_[w] = avail[w] & ~rv[w] & ~closers_[w];
      active |= frontier_[w] != 0;
    }
    while (active) {
      std::fill(next_.begin(), next_.end(), 0);
      for_each_bit(frontier_, [&](std::size_t f) {
        const ConstBits rf = g_.row(static_cast<Vertex>(f));
        for (std::size_t w = 0; w < words_; ++w) next_[w] |= rf[w];
      });
      active = false;
      for (std::size_t w = 0; w < words_; ++w) {
        const Word fresh = next_[w] & ~visited_[w];
        if (fresh & closers_[w] & avail[w] & ~rv[w]) return true;
        frontier_[w] = fresh & barrier_[w];
        visited_[w] |= frontier_[w];
        active |= frontier_[w] != 0;
      }
    }
    return false;
  }

  Outcome extend(std::size_t k) {
    const Vertex last = path_[k];
    const ConstBits row = g_.row(last);
    for (std::size_t w = 0; w < words_; ++w) {
      Word candidates = row[w] & avail_[k][w];
      while (candidates != 0) {
        const auto v = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(candidates)));
        candidates &= candidates - 1;
        if (!tick()) return Outcome::kStop;
        if ((closers_[w] >> (v % kWordBits)) & 1U) {
          const std::size_t length = k + 2;
          if (length % 2 == 1 && length >= min_length_) {
            path_.push_back(v);
            return Outcome::kFound;
          }
          continue;
        }
        auto& next = level(k + 1);
        const auto& current = avail_[k];
        for (std::size_t i = 0; i < words_; ++i) next[i] = current[i] & ~row[i];
        if (!closer_reachable(v, next)) continue;
        path_.push_back(v);
        const Outcome out = extend(k + 1);
        if (out != Outcome::kContinue) return out;
        path_.pop_back();
      }
    }
    return Outcome::kContinue;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  std::size_t min_length_;
  SharedState& shared_;
  Vertex v0_ = 0;
  std::vector<std::vector<Word>> avail_;
  std::vector<Word> closers_, upper_, visited_, frontier_, next_, barrier_;
  std::vector<Vertex> path_;
};

}  // namespace

HoleSearchResult find_odd_hole(const Graph& g, const HoleSearchOptions& options) {
  if (options.min_length < 5 || options.min_length % 2 == 0) {
    throw Error(kModule, ErrorCode::kInvalidArgument,
                "minimum hole length must be odd and at least 5, got " + std::to_string(options.min_length));
  }
  const std::size_t n = g.vertex_count();
  SharedState shared;
  shared.budget = options.budget;
  std::atomic<std::size_t> next_start{0};
  std::mutex mutex;
  std::vector<Vertex> best_cycle;

  auto worker = [&] {
    StartSearch search(g, options.min_length, shared);
    for (;;) {
      const std::size_t v0 = next_start.fetch_add(1);
      if (v0 >= n || v0 > shared.best_start.load() || shared.exhausted.load()) return;
      const auto out = search.run(static_cast<Vertex>(v0));
      if (out == StartSearch::Outcome::kFound) {
        std::lock_guard lock(mutex);
        if (v0 < shared.best_start.load()) {
          shared.best_start.store(v0);
          best_cycle = search.path();
        }
      } else if (out == StartSearch::Outcome::kStop && shared.exhausted.load()) {
        return;
      }
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  HoleSearchResult result;
  result.steps = std::min(shared.steps.load(), options.budget);
  if (!best_cycle.empty()) {
    result.status = SearchStatus::kFound;
    result.cycle = std::move(best_cycle);
  } else if (shared.exhausted.load()) {
    result.status = SearchStatus::kBudgetExhausted;
  }
  return result;
}

BergeResult is_berge(const Graph& g, const BergeOptions& options) {
  BergeResult result;
  HoleSearchOptions hole_options{options.hole_min_length, options.budget, options.jobs};
  const auto holes = find_odd_hole(g, hole_options);
  result.steps = holes.steps;
  if (holes.status == SearchStatus::kFound) {
    result.verdict = BergeVerdict::kNotBerge;
    result.witness = HoleWitness{HoleKind::kHole, holes.cycle};
    return result;
  }
  if (holes.status == SearchStatus::kBudgetExhausted) {
    result.exhausted = HoleKind::kHole;
    return result;
  }

  hole_options.min_length = options.antihole_min_length;
  hole_options.budget = options.budget - holes.steps;
  const auto antiholes = find_odd_hole(complement(g), hole_options);
  result.steps += antiholes.steps;
  if (antiholes.status == SearchStatus::kFound) {
    result.verdict = BergeVerdict::kNotBerge;
    result.witness = HoleWitness{HoleKind::kAntihole, antiholes.cycle};
  } else if (antiholes.status == SearchStatus::kBudgetExhausted) {
    result.exhausted = HoleKind::kAntihole;
  } else {
    result.verdict = BergeVerdict::kBerge;
  }
  return result;
}

}  // namespace ggx
