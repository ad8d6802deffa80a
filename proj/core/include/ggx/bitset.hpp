#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ggx {

using Word = std::uint64_t;
using ConstBits = std::span<const Word>;
using MutableBits = std::span<Word>;

inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kNoBit = ~std::size_t{0};

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::size_t popcount(ConstBits bits);
std::size_t intersection_count(ConstBits a, ConstBits b);
bool intersects(ConstBits a, ConstBits b);
// a ⊆ b
bool is_subset(ConstBits a, ConstBits b);
std::size_t find_first(ConstBits bits);
// First set bit strictly after `pos`.
std::size_t find_next(ConstBits bits, std::size_t pos);

template <class F>
void for_each_bit(ConstBits bits, F&& f) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    Word word = bits[w];
    while (word != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(word));
      f(w * kWordBits + bit);
      word &= word - 1;
    }
  }
}

// Fixed-size set of small integers. Bits past size() are always zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool value = false);
  static Bitset from_bits(ConstBits bits, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set_all();
  void clear();
  void flip_all();

  std::size_t count() const { return popcount(words_); }
  bool any() const;
  bool none() const { return !any(); }
  std::size_t find_first() const { return ggx::find_first(words_); }
  std::size_t find_next(std::size_t pos) const { return ggx::find_next(words_, pos); }

  Bitset& operator&=(ConstBits other);
  Bitset& operator|=(ConstBits other);
  Bitset& operator^=(ConstBits other);
  Bitset& subtract(ConstBits other);

  ConstBits bits() const noexcept { return words_; }
  MutableBits mutable_bits() noexcept { return words_; }
  operator ConstBits() const noexcept { return words_; }  // NOLINT

  std::vector<std::uint32_t> to_indices() const;
  template <class F>
  void for_each(F&& f) const {
    for_each_bit(words_, std::forward<F>(f));
  }

  std::size_t hash() const noexcept;
  bool operator==(const Bitset& other) const = default;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Square-or-rectangular boolean matrix stored as contiguous bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  ConstBits row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
  MutableBits row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] |= Word{1} << (c % kWordBits); }
  void reset(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace ggx
