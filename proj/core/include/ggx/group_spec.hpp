#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ggx {

// Parsed form of the group DSL:
//   spec := term ("x" term)*
//   term := "C"int | "S"int | "A"int | "D"int | "Q8" | "cayley:"path | "perm:"path
// "D"n is the dihedral group of order 2n. A path term runs to the end of the
// text, so file-backed factors must come last.
struct GroupSpec {
  enum class Kind {
    kCyclic,
    kSymmetric,
    kAlternating,
    kDihedral,
    kQuaternion8,
    kDirectProduct,
    kCayleyTable,
    kPermGenerators,
  };

  Kind kind = Kind::kCyclic;
  std::uint64_t n = 1;
  std::vector<GroupSpec> factors;  // kDirectProduct only
  std::string path;                // file-backed kinds only

  bool operator==(const GroupSpec&) const = default;
};

inline constexpr std::uint64_t kMaxPermutationDegree = 12;

GroupSpec parse_group_spec(std::string_view text);
std::string render_group_spec(const GroupSpec& spec);

}  // namespace ggx
