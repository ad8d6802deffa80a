#include "ggx/group_spec.hpp"

#include <cctype>

#include "ggx/error.hpp"

namespace ggx {

namespace {

[[noreturn]] void syntax(const std::string& message) { throw Error("groups", ErrorCode::kSyntax, message); }

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    if (text_.empty()) syntax("empty group spec");
    std::vector<GroupSpec> terms;
    terms.push_back(term());
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x') syntax("expected 'x' at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    GroupSpec product;
    product.kind = GroupSpec::Kind::kDirectProduct;
    product.factors = std::move(terms);
    return product;
  }

 private:
  bool consume(std::string_view prefix) {
    if (text_.substr(pos_).starts_with(prefix)) {
      pos_ += prefix.size();
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 1'000'000'000'000ULL) throw Error("groups", ErrorCode::kUnsupportedGroup, "order parameter too large");
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) syntax("expected integer at offset " + std::to_string(start) + " in '" + std::string(text_) + "'");
    return value;
  }

  GroupSpec term() {
    GroupSpec spec;
    const bool cayley = consume("cayley:");
    if (cayley || consume("perm:")) {
      spec.kind = cayley ? GroupSpec::Kind::kCayleyTable : GroupSpec::Kind::kPermGenerators;
      spec.path = std::string(text_.substr(pos_));
      if (spec.path.empty()) syntax("missing path after file prefix");
      pos_ = text_.size();
      return spec;
    }
    if (consume("Q8")) {
      spec.kind = GroupSpec::Kind::kQuaternion8;
      spec.n = 8;
      return spec;
    }
    if (pos_ >= text_.size()) syntax("unexpected end of group spec");
    switch (text_[pos_]) {
      case 'C': spec.kind = GroupSpec::Kind::kCyclic; break;
      case 'S': spec.kind = GroupSpec::Kind::kSymmetric; break;
      case 'A': spec.kind = GroupSpec::Kind::kAlternating; break;
      case 'D': spec.kind = GroupSpec::Kind::kDihedral; break;
      default: syntax("unknown group term at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }
    ++pos_;
    spec.n = integer();
    if (spec.n < 1) throw Error("groups", ErrorCode::kInvalidOrder, "order parameter must be >= 1");
    if ((spec.kind == GroupSpec::Kind::kSymmetric || spec.kind == GroupSpec::Kind::kAlternating) &&
        spec.n > kMaxPermutationDegree) {
      throw Error("groups", ErrorCode::kUnsupportedGroup,
                  "degree " + std::to_string(spec.n) + " exceeds the cap of " + std::to_string(kMaxPermutationDegree));
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render_group_spec(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic: return "C" + std::to_string(spec.n);
    case GroupSpec::Kind::kSymmetric: return "S" + std::to_string(spec.n);
    case GroupSpec::Kind::kAlternating: return "A" + std::to_string(spec.n);
    case GroupSpec::Kind::kDihedral: return "D" + std::to_string(spec.n);
    case GroupSpec::Kind::kQuaternion8: return "Q8";
    case GroupSpec::Kind::kCayleyTable: return "cayley:" + spec.path;
    case GroupSpec::Kind::kPermGenerators: return "perm:" + spec.path;
    case GroupSpec::Kind::kDirectProduct: {
      std::string out;
      for (const auto& factor : spec.factors) {
        if (!out.empty()) out += 'x';
        out += render_group_spec(factor);
      }
      return out;
    }
  }
  return {};
}

}  // namespace ggx
