#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ggx {

// Permutation of {0, ..., degree-1} stored as an image array. Text form uses
// 1-based cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws if `images` is not a bijection.
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation parse_cycles(std::string_view text, std::size_t degree);
  // 1-based points, e.g. cycle({1, 2, 3}, 5).
  static Permutation cycle(const std::vector<std::size_t>& points, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint16_t operator()(std::size_t point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  // Product in which this permutation acts first: (a * b)(i) = b(a(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  std::uint64_t order() const;
  bool is_identity() const;
  bool is_even() const;
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

}  // namespace ggx
