#include "ggx/permutation.hpp"

#include <cctype>
#include <numeric>

#include "ggx/error.hpp"

namespace ggx {

namespace {

[[noreturn]] void bad_label(const std::string& what) { throw Error("groups", ErrorCode::kBadLabel, what); }

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const auto image : images_) {
    if (image >= images_.size() || seen[image]) bad_label("image array is not a permutation");
    seen[image] = true;
  }
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) bad_label("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') bad_label("expected '(' in '" + std::string(text) + "'");
    ++pos;
    std::vector<std::size_t> points;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        ++digits;
        if (value > 65535) bad_label("point out of range");
      }
      if (digits == 0) bad_label("malformed cycle in '" + std::string(text) + "'");
      if (value < 1 || value > degree) {
        bad_label("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      if (used[value - 1]) bad_label("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      points.push_back(value - 1);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      images[points[i]] = static_cast<std::uint16_t>(points[(i + 1) % points.size()]);
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(const std::vector<std::size_t>& points, std::size_t degree) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  for (std::size_t i = 0; i < points.size(); ++i) {
    images.at(points[i] - 1) = static_cast<std::uint16_t>(points[(i + 1) % points.size()] - 1);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t length = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace ggx
