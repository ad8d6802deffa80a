#pragma once

// Brute-force reference computations used to cross-check the library. They
// trade speed for directness and share no code paths with the algorithms
// they check beyond group multiplication.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggx/finite_group.hpp"
#include "ggx/graph.hpp"
#include "ggx/power_graphs.hpp"

namespace ggx::oracle {

// x^1, x^2, ... by repeated multiplication until the identity comes back.
std::vector<Element> powers_by_multiplication(const FiniteGroup& group, Element x);

Digraph directed_power_graph(const FiniteGroup& group);
Graph power_graph(const FiniteGroup& group);

// True iff some z has x, y in <z>, by scanning every z.
bool common_cyclic_overgroup(const FiniteGroup& group, Element x, Element y);

// Adjacency matrices as bit masks, for graphs with at most 16 vertices.
std::vector<std::uint16_t> masks(const Graph& g);

// Enumerates every odd vertex subset of size >= min_length and tests whether
// it induces a cycle.
bool has_odd_hole(const Graph& g, std::size_t min_length = 5);
bool is_berge(const Graph& g);

// Expected type of each ≡-class of power_graph(group), from group data: a
// class made of one ≈-class is simple; otherwise it must be
// {x in <y> : o(x) >= p^s} for a member y of order p^r, and is typed
// Complex{p, r, s}. Returns a description of the first mismatch with
// `computed`, if any.
std::optional<std::string> check_class_types(const FiniteGroup& group, const Partition& equiv,
                                             const std::vector<ClassType>& computed);

}  // namespace ggx::oracle
