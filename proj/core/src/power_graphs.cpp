#include "ggx/power_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "ggx/error.hpp"
#include "ggx/groups.hpp"
#include "ggx/number_theory.hpp"

namespace ggx {

namespace {

constexpr const char* kModule = "powergraphs";

void check_cap(const FiniteGroup& group, std::size_t cap) {
  if (group.order() > cap) {
    throw Error(kModule, ErrorCode::kGraphCapExceeded,
                "group of order " + std::to_string(group.order()) + " exceeds graph cap " + std::to_string(cap));
  }
}

// Lowest-index generator of <x> for every x.
std::vector<Element> cyclic_subgroup_ids(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<Element> id(n, 0);
  std::vector<bool> done(n, false);
  for (std::size_t xi = 0; xi < n; ++xi) {
    if (done[xi]) continue;
    const auto x = static_cast<Element>(xi);
    const auto powers = cyclic_subgroup(group, x);
    const std::uint64_t o = powers.size();
    Element lowest = x;
    for (std::uint64_t k = 1; k < o; ++k) {
      if (std::gcd(k, o) == 1) lowest = std::min(lowest, powers[k]);
    }
    for (std::uint64_t k = 1; k < o; ++k) {
      if (std::gcd(k, o) == 1) {
        id[powers[k]] = lowest;
        done[powers[k]] = true;
      }
    }
    if (o == 1) done[xi] = true;
  }
  return id;
}

}  // namespace

Digraph directed_power_graph(const FiniteGroup& group, std::size_t cap) {
  check_cap(group, cap);
  Digraph out(group.order(), group.labels());
  for (std::size_t xi = 0; xi < group.order(); ++xi) {
    const auto x = static_cast<Element>(xi);
    for (const Element y : cyclic_subgroup(group, x)) {
      if (y != x) out.add_arc(x, y);
    }
  }
  return out;
}

Graph power_graph(const FiniteGroup& group, std::size_t cap) {
  check_cap(group, cap);
  Graph out(group.order(), group.labels());
  for (std::size_t xi = 0; xi < group.order(); ++xi) {
    const auto x = static_cast<Element>(xi);
    for (const Element y : cyclic_subgroup(group, x)) {
      if (y != x) out.add_edge(x, y);
    }
  }
  return out;
}

std::vector<Element> maximal_cyclic_generators(const FiniteGroup& group) {
  const auto id = cyclic_subgroup_ids(group);
  std::vector<bool> has_overgroup(group.order(), false);
  for (std::size_t wi = 0; wi < group.order(); ++wi) {
    const auto w = static_cast<Element>(wi);
    if (id[w] != w) continue;
    for (const Element y : cyclic_subgroup(group, w)) {
      if (id[y] != w) has_overgroup[id[y]] = true;
    }
  }
  std::vector<Element> out;
  for (std::size_t zi = 0; zi < group.order(); ++zi) {
    const auto z = static_cast<Element>(zi);
    if (id[z] == z && !has_overgroup[z]) out.push_back(z);
  }
  return out;
}

Graph enhanced_power_graph(const FiniteGroup& group, std::size_t cap) {
  check_cap(group, cap);
  Graph out(group.order(), group.labels());
  for (const Element z : maximal_cyclic_generators(group)) {
    const auto members = cyclic_subgroup(group, z);
    out.add_clique(members);
  }
  return out;
}

Partition::Partition(std::vector<std::vector<Vertex>> cls, std::size_t vertex_count)
    : classes(std::move(cls)), class_of(vertex_count, 0) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const Vertex v : classes[c]) class_of[v] = static_cast<std::uint32_t>(c);
  }
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& c : classes) {
    for (const Vertex v : c) {
      if (coarser.class_of[v] != coarser.class_of[c.front()]) return false;
    }
  }
  return true;
}

Partition approx_classes(const FiniteGroup& group) {
  const auto id = cyclic_subgroup_ids(group);
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::uint32_t> slot(group.order(), ~std::uint32_t{0});
  for (std::size_t x = 0; x < group.order(); ++x) {
    const Element key = id[x];
    if (slot[key] == ~std::uint32_t{0}) {
      slot[key] = static_cast<std::uint32_t>(classes.size());
      classes.emplace_back();
    }
    classes[slot[key]].push_back(static_cast<Vertex>(x));
  }
  return Partition(std::move(classes), group.order());
}

Partition equiv_classes(const Graph& g) { return Partition(closed_neighborhood_classes(g), g.vertex_count()); }

CenterInfo center_of_finite_component(const Graph& power) {
  CenterInfo info;
  const std::size_t n = power.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (power.degree(v) + 1 == n) info.center.push_back(v);
  }
  info.trivial = info.center.size() == 1;
  return info;
}

namespace {

void require_trivial_center(const Graph& power) {
  const auto center = center_of_finite_component(power);
  if (!center.trivial) {
    throw Error(kModule, ErrorCode::kCenterNotTrivial,
                "class types are defined for power graphs with trivial center (center has " +
                    std::to_string(center.center.size()) + " vertices)");
  }
}

ClassType classify_unchecked(const Graph& power, const Partition& classes, std::size_t class_index) {
  const std::size_t n = power.vertex_count();
  const auto& members = classes.classes.at(class_index);
  const Vertex rep = members.front();

  // N̄(N̄(C)) as an intersection of closed neighborhoods, one per class touched.
  const Bitset around = closed_neighborhood(power, rep);
  Bitset second(n, true);
  std::vector<bool> class_seen(classes.size(), false);
  around.for_each([&](std::size_t y) {
    const auto c = classes.class_of[y];
    if (class_seen[c]) return;
    class_seen[c] = true;
    second &= closed_neighborhood(power, static_cast<Vertex>(y)).bits();
  });
  const std::size_t outer = second.count();
  const auto pr = as_prime_power(outer);
  if (!pr || outer <= members.size()) return ClassType::simple();
  const std::size_t diff = outer - members.size();
  unsigned s_minus_one = 0;
  std::size_t d = diff;
  while (d % pr->prime == 0) {
    d /= pr->prime;
    ++s_minus_one;
  }
  if (d != 1) return ClassType::simple();
  const unsigned r = pr->exponent;
  const unsigned s = s_minus_one + 1;
  if (!(r > s && s > 0)) return ClassType::simple();

  // No two mutually non-adjacent classes D, E adjacent to C with |D|, |E| <= |C|.
  std::vector<Vertex> small_neighbors;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c == class_index) continue;
    const Vertex other = classes.classes[c].front();
    if (classes.classes[c].size() <= members.size() && power.adjacent(rep, other)) small_neighbors.push_back(other);
  }
  for (std::size_t i = 0; i < small_neighbors.size(); ++i) {
    for (std::size_t j = i + 1; j < small_neighbors.size(); ++j) {
      if (!power.adjacent(small_neighbors[i], small_neighbors[j])) return ClassType::simple();
    }
  }
  return ClassType::complex_class(pr->prime, r, s);
}

}  // namespace

ClassType classify_class(const Graph& power, const Partition& classes, std::size_t class_index) {
  require_trivial_center(power);
  return classify_unchecked(power, classes, class_index);
}

std::vector<ClassType> classify_classes(const Graph& power, const Partition& classes) {
  require_trivial_center(power);
  std::vector<ClassType> types;
  types.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) types.push_back(classify_unchecked(power, classes, c));
  return types;
}

ClassDecomposition class_decomposition(const FiniteGroup& group, const Graph& power) {
  ClassDecomposition out;
  out.approx = approx_classes(group);
  out.equiv = equiv_classes(power);
  if (center_of_finite_component(power).trivial) out.types = classify_classes(power, out.equiv);
  return out;
}

}  // namespace ggx
