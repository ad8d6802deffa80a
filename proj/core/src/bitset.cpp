#include "ggx/bitset.hpp"

#include <algorithm>

namespace ggx {

std::size_t popcount(ConstBits bits) {
  std::size_t total = 0;
  for (const Word w : bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t intersection_count(ConstBits a, ConstBits b) {
  std::size_t total = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

bool intersects(ConstBits a, ConstBits b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset(ConstBits a, ConstBits b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Word other = i < b.size() ? b[i] : 0;
    if ((a[i] & ~other) != 0) return false;
  }
  return true;
}

std::size_t find_first(ConstBits bits) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    if (bits[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits[w]));
  }
  return kNoBit;
}

std::size_t find_next(ConstBits bits, std::size_t pos) {
  std::size_t start = pos + 1;
  std::size_t w = start / kWordBits;
  if (w >= bits.size()) return kNoBit;
  Word word = bits[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (word != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    if (++w >= bits.size()) return kNoBit;
    word = bits[w];
  }
}

Bitset::Bitset(std::size_t size, bool value) : size_(size), words_(words_for(size), value ? ~Word{0} : 0) {
  trim();
}

Bitset Bitset::from_bits(ConstBits bits, std::size_t size) {
  Bitset out(size);
  std::copy_n(bits.begin(), std::min(bits.size(), out.words_.size()), out.words_.begin());
  out.trim();
  return out;
}

void Bitset::set_all() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  trim();
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

void Bitset::flip_all() {
  for (Word& w : words_) w = ~w;
  trim();
}

bool Bitset::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

Bitset& Bitset::operator&=(ConstBits other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.size() ? other[i] : 0;
  return *this;
}

Bitset& Bitset::operator|=(ConstBits other) {
  const std::size_t n = std::min(words_.size(), other.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other[i];
  trim();
  return *this;
}

Bitset& Bitset::operator^=(ConstBits other) {
  const std::size_t n = std::min(words_.size(), other.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] ^= other[i];
  trim();
  return *this;
}

Bitset& Bitset::subtract(ConstBits other) {
  const std::size_t n = std::min(words_.size(), other.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other[i];
  return *this;
}

std::vector<std::uint32_t> Bitset::to_indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

std::size_t Bitset::hash() const noexcept {
  // FNV-1a over words, then a final avalanche.
  std::uint64_t h = 1469598103934665603ULL;
  for (const Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

void Bitset::trim() {
  if (words_.empty()) return;
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0) words_.back() &= (Word{1} << tail) - 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

}  // namespace ggx
