#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggx/group_spec.hpp"
#include "ggx/permutation.hpp"

namespace ggx {

// Dense index of a group element; index 0 is always the identity.
using Element = std::uint32_t;

struct BuildOptions {
  std::uint64_t order_cap = 200'000;
  // Groups up to this order get a materialized multiplication table.
  std::uint64_t table_limit = 4096;
};

// Immutable finite group over dense element indices. Copies share state.
class FiniteGroup {
 public:
  struct State;

  std::size_t order() const noexcept;
  static constexpr Element identity() noexcept { return 0; }

  Element multiply(Element a, Element b) const;
  Element inverse(Element x) const;
  Element power(Element x, std::uint64_t exponent) const;
  std::uint64_t element_order(Element x) const;

  const std::string& label(Element x) const;
  const std::vector<std::string>& labels() const noexcept;
  // Exact label match; permutation groups also accept any cycle notation.
  std::optional<Element> find(std::string_view label) const;

  bool is_permutation_group() const noexcept;
  std::size_t degree() const noexcept;
  Permutation permutation(Element x) const;
  std::optional<Element> find(const Permutation& perm) const;

  bool has_table() const noexcept;
  const GroupSpec& spec() const noexcept;
  std::string name() const;
  // Distinct primes dividing the group order, increasing.
  const std::vector<std::uint64_t>& primes() const noexcept;

  explicit FiniteGroup(std::shared_ptr<const State> state);

 private:
  std::shared_ptr<const State> state_;
};

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& options = {});
FiniteGroup build_group(std::string_view spec_text, const BuildOptions& options = {});

// Builds from generators given as image arrays on {0..degree-1}.
FiniteGroup permutation_group(std::size_t degree, const std::vector<Permutation>& generators,
                              const BuildOptions& options = {}, GroupSpec spec = {});

// Returns a description of the first violated group law, or nullopt. Associativity
// is decided with Light's test over a generating set, so the check is exact.
std::optional<std::string> check_group_laws(const FiniteGroup& group);

// Order of the group named by `spec`, without building it; nullopt for file-backed specs.
std::optional<std::uint64_t> announced_order(const GroupSpec& spec);

}  // namespace ggx
