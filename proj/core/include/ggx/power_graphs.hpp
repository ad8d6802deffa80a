#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ggx/finite_group.hpp"
#include "ggx/graph.hpp"

namespace ggx {

inline constexpr std::size_t kDefaultGraphCap = 25'000;

// Arc x -> y, x != y, iff y is a power of x.
Digraph directed_power_graph(const FiniteGroup& group, std::size_t cap = kDefaultGraphCap);
// x ~ y iff one is a power of the other.
Graph power_graph(const FiniteGroup& group, std::size_t cap = kDefaultGraphCap);
// x ~ y iff both lie in one cyclic subgroup.
Graph enhanced_power_graph(const FiniteGroup& group, std::size_t cap = kDefaultGraphCap);

// One generator (the lowest index) per maximal cyclic subgroup.
std::vector<Element> maximal_cyclic_generators(const FiniteGroup& group);

struct Partition {
  std::vector<std::vector<Vertex>> classes;  // sorted members, classes ordered by lowest member
  std::vector<std::uint32_t> class_of;

  Partition() = default;
  Partition(std::vector<std::vector<Vertex>> classes, std::size_t vertex_count);

  std::size_t size() const noexcept { return classes.size(); }
  const std::vector<Vertex>& class_containing(Vertex v) const { return classes[class_of[v]]; }
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition&) const = default;
};

// Classes of x ≈ y :⟺ <x> = <y>.
Partition approx_classes(const FiniteGroup& group);
// Classes of x ≡ y :⟺ equal closed neighborhoods.
Partition equiv_classes(const Graph& g);

struct ClassType {
  bool complex = false;
  // Complex classes only: the class is {x in <y> : o(x) >= p^s} with o(y) = p^r.
  std::uint64_t prime = 0;
  unsigned r = 0;
  unsigned s = 0;

  static ClassType simple() { return {}; }
  static ClassType complex_class(std::uint64_t p, unsigned r, unsigned s) { return {true, p, r, s}; }
  bool operator==(const ClassType&) const = default;
};

// Decides the type of ≡-class `class_index` of a power graph whose center is
// trivial from the graph alone.
ClassType classify_class(const Graph& power, const Partition& classes, std::size_t class_index);
std::vector<ClassType> classify_classes(const Graph& power, const Partition& classes);

struct CenterInfo {
  std::vector<Vertex> center;  // vertices adjacent to all others
  bool trivial = false;
};

CenterInfo center_of_finite_component(const Graph& power);

struct ClassDecomposition {
  Partition approx;
  Partition equiv;
  std::vector<ClassType> types;  // empty when the power graph has a non-trivial center
};

ClassDecomposition class_decomposition(const FiniteGroup& group, const Graph& power);

}  // namespace ggx
