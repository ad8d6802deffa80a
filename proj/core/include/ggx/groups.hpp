#pragma once

#include <cstdint>
#include <vector>

#include "ggx/finite_group.hpp"

namespace ggx {

inline constexpr std::size_t kDefaultClosureCap = 1U << 20;

// Powers x^0, x^1, ..., x^(o(x)-1) in exponent order.
std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element x);

// Subgroup generated by `generators`, identity first, then BFS order.
std::vector<Element> subgroup_closure(const FiniteGroup& group, const std::vector<Element>& generators,
                                      std::size_t cap = kDefaultClosureCap);

// True iff <x, y> is cyclic, i.e. the closure holds an element of order |<x, y>|.
bool is_cyclic_pair(const FiniteGroup& group, Element x, Element y, std::size_t cap = kDefaultClosureCap);

// Elements whose order is a power of p, identity included, increasing index.
std::vector<Element> p_elements(const FiniteGroup& group, std::uint64_t p);

struct SylowRecord {
  std::uint64_t prime = 0;
  unsigned exponent = 0;  // v_p(|G|)
  bool unique = false;
  bool cyclic = false;
};

struct SylowReport {
  std::vector<SylowRecord> records;  // ordered by prime

  const SylowRecord* find(std::uint64_t prime) const;
};

SylowReport sylow_report(const FiniteGroup& group);

// (x_1, ..., x_n) over the primes of |G| in increasing order, with x_i in
// <x> ∩ G_{p_i} and x = x_1 x_2 ... x_n.
std::vector<Element> prime_power_decomposition(const FiniteGroup& group, Element x);

// Multiset of element orders: order -> number of elements.
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(const FiniteGroup& group);

}  // namespace ggx
