#include "ggx/tools/oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ggx/number_theory.hpp"

namespace ggx::oracle {

std::vector<Element> powers_by_multiplication(const FiniteGroup& group, Element x) {
  std::vector<Element> out;
  Element current = x;
  for (;;) {
    out.push_back(current);
    if (current == group.identity()) break;
    current = group.multiply(current, x);
  }
  return out;
}

Digraph directed_power_graph(const FiniteGroup& group) {
  Digraph out(group.order(), group.labels());
  for (Element x = 0; x < group.order(); ++x) {
    for (const Element y : powers_by_multiplication(group, x)) {
      if (y != x) out.add_arc(x, y);
    }
  }
  return out;
}

Graph power_graph(const FiniteGroup& group) { return oracle::directed_power_graph(group).underlying(); }

bool common_cyclic_overgroup(const FiniteGroup& group, Element x, Element y) {
  for (Element z = 0; z < group.order(); ++z) {
    bool has_x = false, has_y = false;
    for (const Element w : powers_by_multiplication(group, z)) {
      has_x |= w == x;
      has_y |= w == y;
    }
    if (has_x && has_y) return true;
  }
  return false;
}

std::vector<std::uint16_t> masks(const Graph& g) {
  std::vector<std::uint16_t> out(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (g.adjacent(v, u)) out[v] |= static_cast<std::uint16_t>(1U << u);
    }
  }
  return out;
}

namespace {

bool odd_hole_in(const std::vector<std::uint16_t>& adj, std::size_t min_length) {
  const std::size_t n = adj.size();
  for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
    const auto k = static_cast<std::size_t>(std::popcount(subset));
    if (k < min_length || k % 2 == 0) continue;
    bool two_regular = true;
    for (std::size_t v = 0; v < n && two_regular; ++v) {
      if ((subset >> v & 1U) && std::popcount(adj[v] & subset) != 2) two_regular = false;
    }
    if (!two_regular) continue;
    // A 2-regular graph is a cycle iff it is connected.
    std::uint32_t seen = subset & (~subset + 1), frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (frontier >> v & 1U) next |= adj[v] & subset;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == subset) return true;
  }
  return false;
}

}  // namespace

bool has_odd_hole(const Graph& g, std::size_t min_length) { return odd_hole_in(masks(g), min_length); }

bool is_berge(const Graph& g) {
  auto adj = masks(g);
  if (odd_hole_in(adj, 5)) return false;
  const auto full = static_cast<std::uint16_t>((1U << g.vertex_count()) - 1);
  for (std::size_t v = 0; v < adj.size(); ++v) adj[v] = static_cast<std::uint16_t>(~adj[v] & full & ~(1U << v));
  return !odd_hole_in(adj, 5);
}

std::optional<std::string> check_class_types(const FiniteGroup& group, const Partition& equiv,
                                             const std::vector<ClassType>& computed) {
  // ≈-class of x: the set of generators of <x>, compared as sorted element sets.
  std::vector<std::vector<Element>> generated(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    generated[x] = powers_by_multiplication(group, x);
    std::sort(generated[x].begin(), generated[x].end());
  }
  for (std::size_t c = 0; c < equiv.size(); ++c) {
    const auto& members = equiv.classes[c];
    std::set<std::vector<Element>> subgroups;
    std::uint64_t max_order = 0, min_order = ~std::uint64_t{0};
    Element top = members.front();
    for (const Vertex v : members) {
      subgroups.insert(generated[v]);
      const auto o = group.element_order(v);
      if (o > max_order) {
        max_order = o;
        top = v;
      }
      min_order = std::min(min_order, o);
    }
    ClassType expected = ClassType::simple();
    if (subgroups.size() > 1) {
      const auto high = as_prime_power(max_order);
      const auto low = as_prime_power(min_order);
      if (!high || !low || high->prime != low->prime) {
        return "class of " + group.label(members.front()) + " joins several cyclic subgroups but is not a p-class";
      }
      expected = ClassType::complex_class(high->prime, high->exponent, low->exponent);
      std::vector<Element> shape;
      for (const Element x : generated[top]) {
        if (group.element_order(x) >= min_order) shape.push_back(x);
      }
      std::vector<Vertex> sorted_members(members);
      std::sort(sorted_members.begin(), sorted_members.end());
      if (shape != std::vector<Element>(sorted_members.begin(), sorted_members.end())) {
        return "class of " + group.label(members.front()) + " is not {x in <y> : o(x) >= p^s}";
      }
    }
    if (!(computed.at(c) == expected)) {
      return "class of " + group.label(members.front()) + " typed " +
             (computed[c].complex ? "complex" : "simple") + ", expected " + (expected.complex ? "complex" : "simple") +
             (expected.complex ? " {" + std::to_string(expected.prime) + "," + std::to_string(expected.r) + "," +
                                     std::to_string(expected.s) + "}"
                               : "");
    }
  }
  return std::nullopt;
}

}  // namespace ggx::oracle
