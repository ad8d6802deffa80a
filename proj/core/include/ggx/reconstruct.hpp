#pragma once

#include <string>
#include <vector>

#include "ggx/graph.hpp"
#include "ggx/power_graphs.hpp"

namespace ggx {

enum class CenterCaseTag { kTrivialCenter, kCyclicPrimePower, kCyclicPQ, kCyclicOther, kPGroup };

std::string to_string(CenterCaseTag tag);

struct CenterCase {
  CenterCaseTag tag = CenterCaseTag::kTrivialCenter;
  std::vector<Vertex> center;
};

// Reads the shape of the group off its power graph when the center is larger
// than the identity: complete, or split by removing the center into a
// connected / disconnected rest.
CenterCase classify_center_case(const Graph& power);

// ≡-classes of a power graph with trivial center, typed from the graph alone.
struct GraphClasses {
  Partition equiv;
  std::vector<ClassType> types;
  Vertex identity = 0;  // the unique full-degree vertex
  // Per vertex: some neighbor w forms a singleton simple class with N̄(w) != V.
  std::vector<bool> sees_singleton;

  bool is_simple(Vertex v) const { return !types[equiv.class_of[v]].complex; }
  std::size_t class_size(Vertex v) const { return equiv.class_containing(v).size(); }
};

GraphClasses graph_classes(const Graph& power);

// Decides z -> x from the power graph, with ≡-class sizes standing in for the
// (invisible) ≈-class sizes. z and x must be distinct non-identity vertices of
// simple classes.
bool arrow_test(const Graph& power, const GraphClasses& classes, Vertex z, Vertex x);

Graph reconstruct_enhanced(const Graph& power);

// A ≈-partition consistent with the graph: simple classes as they are, each
// complex class {p, r, s} cut into blocks of sizes φ(p^s), ..., φ(p^r) in
// index order.
Partition reconstructed_approx_classes(const GraphClasses& classes);

// A digraph isomorphic to the directed power graph. Only for power graphs
// with trivial center.
Digraph reconstruct_directed(const Graph& power);

}  // namespace ggx
