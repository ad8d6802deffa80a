#include "ggx/reconstruct.hpp"

#include <queue>

#include "ggx/error.hpp"
#include "ggx/number_theory.hpp"

namespace ggx {

namespace {

constexpr const char* kModule = "reconstruct";

bool connected_without(const Graph& g, const Bitset& removed) {
  const std::size_t n = g.vertex_count();
  Bitset seen = removed;
  std::size_t start = kNoBit;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed.test(v)) {
      start = v;
      break;
    }
  }
  if (start == kNoBit) return true;
  std::queue<std::size_t> queue;
  queue.push(start);
  seen.set(start);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for_each_bit(g.row(static_cast<Vertex>(v)), [&](std::size_t u) {
      if (!seen.test(u)) {
        seen.set(u);
        queue.push(u);
      }
    });
  }
  return seen.count() == n;
}

}  // namespace

std::string to_string(CenterCaseTag tag) {
  switch (tag) {
    case CenterCaseTag::kTrivialCenter:
      return "trivial-center";
    case CenterCaseTag::kCyclicPrimePower:
      return "cyclic-prime-power";
    case CenterCaseTag::kCyclicPQ:
      return "cyclic-pq";
    case CenterCaseTag::kCyclicOther:
      return "cyclic-other";
    case CenterCaseTag::kPGroup:
      break;
  }
  return "p-group";
}

CenterCase classify_center_case(const Graph& power) {
  const std::size_t n = power.vertex_count();
  CenterCase out;
  out.center = center_of_finite_component(power).center;
  if (out.center.empty()) {
    throw Error(kModule, ErrorCode::kNotAPowerGraph, "no vertex is adjacent to all others");
  }
  if (out.center.size() == 1) {
    out.tag = CenterCaseTag::kTrivialCenter;
    return out;
  }
  if (out.center.size() == n) {
    out.tag = CenterCaseTag::kCyclicPrimePower;
    return out;
  }
  Bitset removed(n);
  for (const Vertex v : out.center) removed.set(v);
  if (connected_without(power, removed)) {
    out.tag = CenterCaseTag::kCyclicOther;
  } else if (2 * out.center.size() >= n) {
    out.tag = CenterCaseTag::kCyclicPQ;
  } else {
    out.tag = CenterCaseTag::kPGroup;
  }
  return out;
}

GraphClasses graph_classes(const Graph& power) {
  GraphClasses out;
  out.equiv = equiv_classes(power);
  out.types = classify_classes(power, out.equiv);
  out.identity = center_of_finite_component(power).center.front();
  const std::size_t n = power.vertex_count();
  Bitset singletons(n);
  for (std::size_t c = 0; c < out.equiv.size(); ++c) {
    const auto& members = out.equiv.classes[c];
    if (members.size() == 1 && !out.types[c].complex && power.degree(members.front()) + 1 != n) {
      singletons.set(members.front());
    }
  }
  out.sees_singleton.assign(n, false);
  for (Vertex v = 0; v < n; ++v) out.sees_singleton[v] = intersects(power.row(v), singletons);
  return out;
}

bool arrow_test(const Graph& power, const GraphClasses& classes, Vertex z, Vertex x) {
  const std::size_t n = power.vertex_count();
  if (z >= n || x >= n) throw Error(kModule, ErrorCode::kPreconditionViolated, "vertex out of range");
  if (z == x) throw Error(kModule, ErrorCode::kPreconditionViolated, "arrow test needs distinct vertices");
  if (z == classes.identity || x == classes.identity) {
    throw Error(kModule, ErrorCode::kPreconditionViolated, "arrow test is not defined at the center");
  }
  if (!classes.is_simple(z) || !classes.is_simple(x)) {
    throw Error(kModule, ErrorCode::kPreconditionViolated, "arrow test needs vertices of simple classes");
  }
  if (classes.equiv.class_of[z] == classes.equiv.class_of[x]) return true;
  if (!power.adjacent(z, x)) return false;
  const std::size_t size_z = classes.class_size(z), size_x = classes.class_size(x);
  if (size_x < size_z) return true;
  return size_x == size_z && classes.sees_singleton[z];
}

Graph reconstruct_enhanced(const Graph& power) {
  const std::size_t n = power.vertex_count();
  const auto center_case = classify_center_case(power);
  Graph out = power;
  switch (center_case.tag) {
    case CenterCaseTag::kCyclicPrimePower:
    case CenterCaseTag::kCyclicPQ:
    case CenterCaseTag::kCyclicOther: {
      std::vector<Vertex> all(n);
      for (Vertex v = 0; v < n; ++v) all[v] = v;
      out.add_clique(all);
      return out;
    }
    case CenterCaseTag::kPGroup:
      return out;
    case CenterCaseTag::kTrivialCenter:
      break;
  }

  // Every simple z joins all of its simple power targets into one clique.
  const auto classes = graph_classes(power);
  std::vector<Vertex> targets;
  for (Vertex z = 0; z < n; ++z) {
    if (z == classes.identity || !classes.is_simple(z)) continue;
    targets.assign({z});
    for_each_bit(power.row(z), [&](std::size_t xi) {
      const auto x = static_cast<Vertex>(xi);
      if (x != classes.identity && classes.is_simple(x) && arrow_test(power, classes, z, x)) targets.push_back(x);
    });
    if (targets.size() > 2) out.add_clique(targets);
  }
  return out;
}

Partition reconstructed_approx_classes(const GraphClasses& classes) {
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t c = 0; c < classes.equiv.size(); ++c) {
    const auto& members = classes.equiv.classes[c];
    const auto& type = classes.types[c];
    if (!type.complex) {
      blocks.push_back(members);
      continue;
    }
    std::size_t next = 0;
    for (unsigned k = type.s; k <= type.r; ++k) {
      const auto size = static_cast<std::size_t>(euler_phi(int_pow(type.prime, k)));
      blocks.emplace_back(members.begin() + static_cast<std::ptrdiff_t>(next),
                          members.begin() + static_cast<std::ptrdiff_t>(next + size));
      next += size;
    }
    if (next != members.size()) {
      throw Error(kModule, ErrorCode::kPreconditionViolated, "complex class size does not match its type");
    }
  }
  return Partition(std::move(blocks), classes.equiv.class_of.size());
}

Digraph reconstruct_directed(const Graph& power) {
  const auto center_case = classify_center_case(power);
  if (center_case.tag != CenterCaseTag::kTrivialCenter) {
    throw Error(kModule, ErrorCode::kUnsupportedCenterCase,
                "directed reconstruction needs a trivial center, got " + to_string(center_case.tag));
  }
  const std::size_t n = power.vertex_count();
  const auto classes = graph_classes(power);
  const auto approx = reconstructed_approx_classes(classes);

  Bitset singletons(n);
  for (const auto& block : approx.classes) {
    if (block.size() == 1 && block.front() != classes.identity) singletons.set(block.front());
  }
  Digraph out(n, power.labels());
  for (Vertex z = 0; z < n; ++z) {
    if (z == classes.identity) continue;
    out.add_arc(z, classes.identity);
    const bool sees_singleton = intersects(power.row(z), singletons);
    const std::size_t size_z = approx.class_containing(z).size();
    for_each_bit(power.row(z), [&](std::size_t xi) {
      const auto x = static_cast<Vertex>(xi);
      if (x == classes.identity) return;
      const std::size_t size_x = approx.class_containing(x).size();
      if (approx.class_of[x] == approx.class_of[z] || size_x < size_z || (size_x == size_z && sees_singleton)) {
        out.add_arc(z, x);
      }
    });
  }
  return out;
}

}  // namespace ggx
