#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggx/bitset.hpp"

namespace ggx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;
// Dense adjacency costs n^2 bits; materialized strong products stop here.
inline constexpr std::size_t kDefaultProductCap = 32'768;

// Simple undirected graph over vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::vector<std::string> labels);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  void set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_.test(u, v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  // Makes every pair of distinct vertices in `members` adjacent.
  void add_clique(std::span<const Vertex> members);

  // Open neighborhood as a bit row.
  ConstBits row(Vertex v) const { return adjacency_.row(v); }
  std::size_t degree(Vertex v) const { return popcount(row(v)); }
  std::size_t edge_count() const;
  // Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  bool same_edges(const Graph& other) const { return adjacency_ == other.adjacency_; }
  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::string> labels_;
  BitMatrix adjacency_;
};

// Simple digraph; both (u, v) and (v, u) may be present, loops may not.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t vertex_count);
  Digraph(std::size_t vertex_count, std::vector<std::string> labels);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }

  bool has_arc(Vertex from, Vertex to) const { return out_.test(from, to); }
  void add_arc(Vertex from, Vertex to);
  ConstBits out_row(Vertex v) const { return out_.row(v); }
  std::size_t out_degree(Vertex v) const { return popcount(out_row(v)); }
  std::size_t in_degree(Vertex v) const;
  std::size_t arc_count() const;
  std::vector<Edge> arcs() const;

  // Underlying simple graph.
  Graph underlying() const;

  bool same_arcs(const Digraph& other) const { return out_ == other.out_; }
  bool operator==(const Digraph& other) const = default;

 private:
  std::vector<std::string> labels_;
  BitMatrix out_;
};

std::vector<std::string> default_labels(std::size_t n);

Graph complement(const Graph& g);
// Vertices of the result follow the order of `vertices`; labels carry over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Bitset closed_neighborhood(const Graph& g, Vertex x);
// Applies `perm` (old vertex -> new vertex) to structure and labels.
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Digraph relabel(const Digraph& g, std::span<const Vertex> perm);

// Strong product of the factors, folded from the left. Product vertex
// (v_1, ..., v_k) has index v_1 * (n_2 ... n_k) + ... + v_k.
Graph strong_product(std::span<const Graph> factors, std::size_t cap = kDefaultProductCap);
// Adjacency in the strong product without materializing it.
bool strong_product_adjacent(std::span<const Graph> factors, std::span<const Vertex> a, std::span<const Vertex> b);

struct QuotientMap {
  std::vector<std::uint32_t> class_of;   // vertex -> class
  std::vector<Vertex> representatives;   // class -> lowest vertex of the class
};

// Partition into classes of equal closed neighborhoods, numbered by their
// lowest member.
std::vector<std::vector<Vertex>> closed_neighborhood_classes(const Graph& g);
std::pair<Graph, QuotientMap> twin_quotient(const Graph& g);

// Vertex sets of the biconnected components (bridges give two-vertex blocks,
// isolated vertices none), each sorted, ordered by lowest member.
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace ggx
