#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ggx/graph.hpp"

namespace ggx {

inline constexpr std::size_t kDefaultIsomorphismCap = 2000;

// A vertex map a -> b that preserves and reflects arcs, or nullopt when none
// exists. The returned map has been checked against every ordered pair.
std::optional<std::vector<Vertex>> digraph_isomorphic(const Digraph& a, const Digraph& b,
                                                      std::size_t cap = kDefaultIsomorphismCap);

// True iff `map` is a bijection a -> b preserving and reflecting arcs.
bool is_isomorphism(const Digraph& a, const Digraph& b, const std::vector<Vertex>& map);

}  // namespace ggx
