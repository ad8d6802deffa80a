#include "ggx/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "ggx/error.hpp"

namespace ggx {

namespace {

constexpr const char* kModule = "graphs";

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw Error(kModule, ErrorCode::kBadVertex, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

Graph::Graph(std::size_t vertex_count) : Graph(vertex_count, default_labels(vertex_count)) {}

Graph::Graph(std::size_t vertex_count, std::vector<std::string> labels)
    : labels_(std::move(labels)), adjacency_(vertex_count, vertex_count) {
  if (labels_.size() != vertex_count) throw Error(kModule, ErrorCode::kInvalidArgument, "label count mismatch");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(vertex_count(), u);
  check_vertex(vertex_count(), v);
  if (u == v) throw Error(kModule, ErrorCode::kInvalidArgument, "loops are not allowed");
  adjacency_.set(u, v);
  adjacency_.set(v, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adjacency_.reset(u, v);
  adjacency_.reset(v, u);
}

void Graph::add_clique(std::span<const Vertex> members) {
  for (const Vertex u : members) {
    auto r = adjacency_.row(u);
    for (const Vertex v : members) r[v / kWordBits] |= Word{1} << (v % kWordBits);
    adjacency_.reset(u, u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) total += degree(v);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for_each_bit(row(u), [&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  }
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_bit(row(v), [&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
  return out;
}

Digraph::Digraph(std::size_t vertex_count) : Digraph(vertex_count, default_labels(vertex_count)) {}

Digraph::Digraph(std::size_t vertex_count, std::vector<std::string> labels)
    : labels_(std::move(labels)), out_(vertex_count, vertex_count) {
  if (labels_.size() != vertex_count) throw Error(kModule, ErrorCode::kInvalidArgument, "label count mismatch");
}

void Digraph::add_arc(Vertex from, Vertex to) {
  check_vertex(vertex_count(), from);
  check_vertex(vertex_count(), to);
  if (from == to) throw Error(kModule, ErrorCode::kInvalidArgument, "loops are not allowed");
  out_.set(from, to);
}

std::size_t Digraph::in_degree(Vertex v) const {
  std::size_t total = 0;
  for (Vertex u = 0; u < vertex_count(); ++u) total += out_.test(u, v) ? 1 : 0;
  return total;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) total += out_degree(v);
  return total;
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for_each_bit(out_row(u), [&](std::size_t v) { out.emplace_back(u, static_cast<Vertex>(v)); });
  }
  return out;
}

Graph Digraph::underlying() const {
  Graph g(vertex_count(), labels_);
  for (const auto& [u, v] : arcs()) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n, g.labels());
  for (Vertex u = 0; u < n; ++u) {
    Bitset r(n, true);
    r.subtract(g.row(u));
    r.reset(u);
    r.for_each([&](std::size_t v) {
      if (v > u) out.add_edge(u, static_cast<Vertex>(v));
    });
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  std::vector<bool> used(g.vertex_count(), false);
  for (const Vertex v : vertices) {
    check_vertex(g.vertex_count(), v);
    if (used[v]) throw Error(kModule, ErrorCode::kBadVertex, "vertex " + std::to_string(v) + " listed twice");
    used[v] = true;
    labels.push_back(g.label(v));
  }
  constexpr auto kAbsent = ~Vertex{0};
  std::vector<Vertex> position(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<Vertex>(i);
  Graph out(vertices.size(), std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for_each_bit(g.row(vertices[i]), [&](std::size_t v) {
      const Vertex j = position[v];
      if (j != kAbsent && j > i) out.add_edge(static_cast<Vertex>(i), j);
    });
  }
  return out;
}

Bitset closed_neighborhood(const Graph& g, Vertex x) {
  check_vertex(g.vertex_count(), x);
  Bitset out = Bitset::from_bits(g.row(x), g.vertex_count());
  out.set(x);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  std::vector<std::string> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[perm[v]] = g.label(v);
  Graph out(n, std::move(labels));
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Digraph relabel(const Digraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  std::vector<std::string> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[perm[v]] = g.label(v);
  Digraph out(n, std::move(labels));
  for (const auto& [u, v] : g.arcs()) out.add_arc(perm[u], perm[v]);
  return out;
}

namespace {

Graph strong_product_pair(const Graph& a, const Graph& b) {
  const std::size_t na = a.vertex_count(), nb = b.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (Vertex x = 0; x < na; ++x) {
    for (Vertex y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  }
  Graph out(na * nb, std::move(labels));
  for (Vertex x1 = 0; x1 < na; ++x1) {
    for (Vertex x2 = x1; x2 < na; ++x2) {
      if (x1 != x2 && !a.adjacent(x1, x2)) continue;
      for (Vertex y1 = 0; y1 < nb; ++y1) {
        for (Vertex y2 = 0; y2 < nb; ++y2) {
          if (y1 != y2 && !b.adjacent(y1, y2)) continue;
          const auto u = static_cast<Vertex>(x1 * nb + y1);
          const auto v = static_cast<Vertex>(x2 * nb + y2);
          if (u < v) out.add_edge(u, v);
        }
      }
    }
  }
  return out;
}

}  // namespace

Graph strong_product(std::span<const Graph> factors, std::size_t cap) {
  if (factors.empty()) throw Error(kModule, ErrorCode::kInvalidArgument, "strong product needs a factor");
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.vertex_count();
    if (total > cap) {
      throw Error(kModule, ErrorCode::kProductCapExceeded,
                  "strong product exceeds " + std::to_string(cap) + " vertices");
    }
  }
  Graph acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = strong_product_pair(acc, factors[i]);
  return acc;
}

bool strong_product_adjacent(std::span<const Graph> factors, std::span<const Vertex> a, std::span<const Vertex> b) {
  bool distinct = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (a[i] == b[i]) continue;
    distinct = true;
    if (!factors[i].adjacent(a[i], b[i])) return false;
  }
  return distinct;
}

namespace {

bool same_closed_neighborhood(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  if (!g.adjacent(u, v)) return false;
  const ConstBits a = g.row(u), b = g.row(v);
  const std::size_t wu = u / kWordBits, wv = v / kWordBits;
  const Word mu = Word{1} << (u % kWordBits), mv = Word{1} << (v % kWordBits);
  for (std::size_t w = 0; w < a.size(); ++w) {
    Word x = a[w], y = b[w];
    if (w == wu) {
      x |= mu;
      y |= mu;
    }
    if (w == wv) {
      x |= mv;
      y |= mv;
    }
    if (x != y) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Vertex>> closed_neighborhood_classes(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> buckets;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) {
    auto& bucket = buckets[closed_neighborhood(g, v).hash()];
    bool placed = false;
    for (const auto c : bucket) {
      if (same_closed_neighborhood(g, classes[c].front(), v)) {
        classes[c].push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(static_cast<std::uint32_t>(classes.size()));
      classes.push_back({v});
    }
  }
  return classes;
}

std::pair<Graph, QuotientMap> twin_quotient(const Graph& g) {
  const auto classes = closed_neighborhood_classes(g);
  QuotientMap map;
  map.class_of.assign(g.vertex_count(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    map.representatives.push_back(classes[c].front());
    for (const Vertex v : classes[c]) map.class_of[v] = static_cast<std::uint32_t>(c);
  }
  return {induced_subgraph(g, map.representatives), std::move(map)};
}

std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> parent(n, 0), vertex_stack, call_stack;
  std::vector<std::vector<Vertex>> blocks;
  std::uint32_t clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    call_stack.push_back(root);
    vertex_stack.push_back(root);
    while (!call_stack.empty()) {
      const Vertex v = call_stack.back();
      const std::size_t next = find_next(g.row(v), cursor[v] == 0 ? kNoBit : cursor[v] - 1);
      if (next != kNoBit) {
        cursor[v] = next + 1;
        const auto u = static_cast<Vertex>(next);
        if (disc[u] == kUnseen) {
          disc[u] = low[u] = clock++;
          parent[u] = v;
          call_stack.push_back(u);
          vertex_stack.push_back(u);
        } else {
          low[v] = std::min(low[v], disc[u]);
        }
        continue;
      }
      call_stack.pop_back();
      if (call_stack.empty()) break;
      const Vertex p = parent[v];
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<Vertex> block;
        Vertex w;
        do {
          w = vertex_stack.back();
          vertex_stack.pop_back();
          block.push_back(w);
        } while (w != v);
        block.push_back(p);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
    vertex_stack.clear();
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      bool clash = false;
      for_each_bit(g.row(v), [&](std::size_t u) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push(static_cast<Vertex>(u));
        } else if (side[u] == side[v]) {
          clash = true;
        }
      });
      if (clash) return false;
    }
  }
  return true;
}

}  // namespace ggx
