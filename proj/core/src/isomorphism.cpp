#include "ggx/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "ggx/error.hpp"

namespace ggx {

namespace {

constexpr const char* kModule = "graphs";

// Both digraphs as one vertex set 0..na+nb-1, so that refinement assigns
// colors comparable across the two sides.
class JointRefiner {
 public:
  JointRefiner(const Digraph& a, const Digraph& b) : na_(a.vertex_count()), total_(na_ + b.vertex_count()) {
    neighbors_.resize(total_);
    add_side(a, 0);
    add_side(b, na_);
  }

  std::size_t left() const { return na_; }
  std::size_t total() const { return total_; }

  // Refines to a stable coloring; false when the sides fall out of balance.
  bool refine(std::vector<std::uint32_t>& color) const {
    std::size_t classes = count_colors(color);
    std::vector<std::vector<std::uint64_t>> signature(total_);
    std::vector<std::uint32_t> order(total_);
    for (;;) {
      for (std::size_t v = 0; v < total_; ++v) {
        auto& sig = signature[v];
        sig.clear();
        for (const auto& [u, type] : neighbors_[v]) sig.push_back(std::uint64_t{color[u]} << 2 | type);
        std::sort(sig.begin(), sig.end());
        sig.insert(sig.begin(), color[v]);
      }
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return signature[x] < signature[y];
      });
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < total_; ++i) {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++next;
        color[order[i]] = next;
      }
      const std::size_t refined = total_ == 0 ? 0 : next + 1;
      if (!balanced(color, refined)) return false;
      if (refined == classes) return true;
      classes = refined;
    }
  }

 private:
  void add_side(const Digraph& g, std::size_t offset) {
    const std::size_t n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      for_each_bit(g.out_row(v), [&](std::size_t u) {
        neighbors_[offset + v].push_back({static_cast<std::uint32_t>(offset + u), 1});
        neighbors_[offset + u].push_back({static_cast<std::uint32_t>(offset + v), 2});
      });
    }
    // Merge the two entries of a mutual pair into one of type 3.
    for (std::size_t v = offset; v < offset + n; ++v) {
      auto& list = neighbors_[v];
      std::sort(list.begin(), list.end());
      std::vector<std::pair<std::uint32_t, std::uint8_t>> merged;
      for (const auto& entry : list) {
        if (!merged.empty() && merged.back().first == entry.first) {
          merged.back().second |= entry.second;
        } else {
          merged.push_back(entry);
        }
      }
      list = std::move(merged);
    }
  }

  std::size_t count_colors(const std::vector<std::uint32_t>& color) const {
    std::vector<std::uint32_t> sorted(color);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  bool balanced(const std::vector<std::uint32_t>& color, std::size_t classes) const {
    std::vector<std::int64_t> diff(classes, 0);
    for (std::size_t v = 0; v < total_; ++v) diff[color[v]] += v < na_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](std::int64_t d) { return d == 0; });
  }

  std::size_t na_, total_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> neighbors_;
};

class Matcher {
 public:
  Matcher(const Digraph& a, const Digraph& b) : a_(a), b_(b), refiner_(a, b) {}

  std::optional<std::vector<Vertex>> run() {
    std::vector<std::uint32_t> color(refiner_.total(), 0);
    if (!refiner_.refine(color)) return std::nullopt;
    return search(std::move(color));
  }

 private:
  std::optional<std::vector<Vertex>> search(std::vector<std::uint32_t> color) {
    const std::size_t na = refiner_.left();
    std::vector<std::uint32_t> size(refiner_.total(), 0);
    for (const auto c : color) ++size[c];
    // First left vertex in a non-singleton cell (cells hold equal counts per side).
    std::size_t pick = na;
    for (std::size_t v = 0; v < na; ++v) {
      if (size[color[v]] > 2) {
        pick = v;
        break;
      }
    }
    if (pick == na) {
      std::vector<Vertex> map(na);
      std::vector<Vertex> right_of(refiner_.total());
      for (std::size_t w = na; w < refiner_.total(); ++w) right_of[color[w]] = static_cast<Vertex>(w - na);
      for (std::size_t v = 0; v < na; ++v) map[v] = right_of[color[v]];
      if (is_isomorphism(a_, b_, map)) return map;
      return std::nullopt;
    }
    const std::uint32_t fresh = static_cast<std::uint32_t>(refiner_.total());
    for (std::size_t w = na; w < refiner_.total(); ++w) {
      if (color[w] != color[pick]) continue;
      auto trial = color;
      trial[pick] = fresh;
      trial[w] = fresh;
      if (!refiner_.refine(trial)) continue;
      if (auto found = search(std::move(trial))) return found;
    }
    return std::nullopt;
  }

  const Digraph& a_;
  const Digraph& b_;
  JointRefiner refiner_;
};

}  // namespace

bool is_isomorphism(const Digraph& a, const Digraph& b, const std::vector<Vertex>& map) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (const Vertex w : map) {
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (a.has_arc(v, u) != b.has_arc(map[v], map[u])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> digraph_isomorphic(const Digraph& a, const Digraph& b, std::size_t cap) {
  if (a.vertex_count() > cap || b.vertex_count() > cap) {
    throw Error(kModule, ErrorCode::kSizeCapExceeded,
                "isomorphism test is limited to " + std::to_string(cap) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return std::nullopt;
  return Matcher(a, b).run();
}

}  // namespace ggx
