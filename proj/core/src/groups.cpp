#include "ggx/groups.hpp"

#include <algorithm>
#include <map>

#include "ggx/error.hpp"
#include "ggx/number_theory.hpp"

namespace ggx {

namespace {
constexpr const char* kModule = "groups";
}

std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element x) {
  std::vector<Element> powers;
  powers.reserve(group.element_order(x));
  Element current = FiniteGroup::identity();
  do {
    powers.push_back(current);
    current = group.multiply(current, x);
  } while (current != FiniteGroup::identity());
  return powers;
}

std::vector<Element> subgroup_closure(const FiniteGroup& group, const std::vector<Element>& generators,
                                      std::size_t cap) {
  std::vector<Element> members{FiniteGroup::identity()};
  std::vector<bool> seen(group.order(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const Element g : generators) {
      const Element next = group.multiply(members[head], g);
      if (!seen[next]) {
        if (members.size() + 1 > cap) {
          throw Error(kModule, ErrorCode::kClosureCapExceeded, "subgroup closure exceeds " + std::to_string(cap));
        }
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  return members;
}

bool is_cyclic_pair(const FiniteGroup& group, Element x, Element y, std::size_t cap) {
  // A cyclic group is abelian.
  if (group.multiply(x, y) != group.multiply(y, x)) return false;
  const auto members = subgroup_closure(group, {x, y}, cap);
  return std::any_of(members.begin(), members.end(),
                     [&](Element z) { return group.element_order(z) == members.size(); });
}

std::vector<Element> p_elements(const FiniteGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw Error(kModule, ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  std::vector<Element> out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    const auto o = group.element_order(static_cast<Element>(x));
    if (o == 1 || (as_prime_power(o) && as_prime_power(o)->prime == p)) out.push_back(static_cast<Element>(x));
  }
  return out;
}

const SylowRecord* SylowReport::find(std::uint64_t prime) const {
  for (const auto& r : records) {
    if (r.prime == prime) return &r;
  }
  return nullptr;
}

SylowReport sylow_report(const FiniteGroup& group) {
  SylowReport report;
  for (const std::uint64_t p : group.primes()) {
    SylowRecord record;
    record.prime = p;
    record.exponent = valuation(group.order(), p);
    const std::uint64_t sylow_order = int_pow(p, record.exponent);
    const auto members = p_elements(group, p);
    if (members.size() == sylow_order) {
      // Unique iff the p-elements form a subgroup, i.e. are product-closed.
      std::vector<bool> in_set(group.order(), false);
      for (const Element x : members) in_set[x] = true;
      bool closed = true;
      for (std::size_t i = 0; i < members.size() && closed; ++i) {
        for (std::size_t j = 0; j < members.size(); ++j) {
          if (!in_set[group.multiply(members[i], members[j])]) {
            closed = false;
            break;
          }
        }
      }
      record.unique = closed;
    }
    // Sylow p-subgroups are conjugate, so one is cyclic iff all are, iff some
    // element has order p^a.
    record.cyclic = std::any_of(members.begin(), members.end(),
                                [&](Element x) { return group.element_order(x) == sylow_order; });
    report.records.push_back(record);
  }
  return report;
}

std::vector<Element> prime_power_decomposition(const FiniteGroup& group, Element x) {
  const std::uint64_t o = group.element_order(x);
  std::vector<Element> parts;
  parts.reserve(group.primes().size());
  for (const std::uint64_t p : group.primes()) {
    const std::uint64_t q = int_pow(p, valuation(o, p));
    const std::uint64_t m = o / q;
    // e ≡ 1 (mod q), e ≡ 0 (mod m)
    const std::uint64_t e = q == 1 ? 0 : (m * mod_inverse(m % q, q)) % o;
    parts.push_back(group.power(x, e));
  }
  return parts;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(const FiniteGroup& group) {
  std::map<std::uint64_t, std::uint64_t> census;
  for (std::size_t x = 0; x < group.order(); ++x) ++census[group.element_order(static_cast<Element>(x))];
  return {census.begin(), census.end()};
}

}  // namespace ggx
