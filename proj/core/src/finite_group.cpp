#include "ggx/finite_group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <unordered_map>

#include "ggx/error.hpp"
#include "ggx/number_theory.hpp"
#include "json.hpp"

namespace ggx {

namespace detail {

class Multiplier {
 public:
  virtual ~Multiplier() = default;
  virtual Element multiply(Element a, Element b) const = 0;
};

}  // namespace detail

namespace {

constexpr const char* kModule = "groups";

// Lookup from an image array to its element index. Degrees up to 16 pack into
// one 64-bit key.
class PermutationIndex {
 public:
  explicit PermutationIndex(std::size_t degree) : degree_(degree) {}

  std::optional<Element> find(const std::uint16_t* images) const {
    if (degree_ <= 16) {
      const auto it = packed_.find(pack(images));
      if (it == packed_.end()) return std::nullopt;
      return it->second;
    }
    const auto it = wide_.find(widen(images));
    if (it == wide_.end()) return std::nullopt;
    return it->second;
  }

  bool insert(const std::uint16_t* images, Element index) {
    if (degree_ <= 16) return packed_.emplace(pack(images), index).second;
    return wide_.emplace(widen(images), index).second;
  }

  void reserve(std::size_t n) {
    if (degree_ <= 16) {
      packed_.reserve(n);
    } else {
      wide_.reserve(n);
    }
  }

 private:
  std::uint64_t pack(const std::uint16_t* images) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < degree_; ++i) key |= static_cast<std::uint64_t>(images[i]) << (4 * i);
    return key;
  }
  std::string widen(const std::uint16_t* images) const {
    return std::string(reinterpret_cast<const char*>(images), degree_ * sizeof(std::uint16_t));
  }

  std::size_t degree_;
  std::unordered_map<std::uint64_t, Element> packed_;
  std::unordered_map<std::string, Element> wide_;
};

}  // namespace

struct FiniteGroup::State {
  GroupSpec spec;
  std::size_t order = 1;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> orders;
  std::vector<Element> inverses;
  std::vector<std::uint16_t> table;
  std::unique_ptr<detail::Multiplier> backend;
  std::unordered_map<std::string, Element> label_index;
  std::vector<std::uint64_t> primes;

  // Permutation groups only.
  std::size_t degree = 0;
  std::vector<std::uint16_t> images;
  std::unique_ptr<PermutationIndex> perm_index;

  Element raw_multiply(Element a, Element b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * order + b];
    return backend->multiply(a, b);
  }
};

namespace {

using State = FiniteGroup::State;

class CyclicMultiplier final : public detail::Multiplier {
 public:
  explicit CyclicMultiplier(std::uint64_t n) : n_(n) {}
  Element multiply(Element a, Element b) const override {
    return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % n_);
  }

 private:
  std::uint64_t n_;
};

class TableMultiplier final : public detail::Multiplier {
 public:
  TableMultiplier(std::size_t order, std::vector<Element> table) : order_(order), table_(std::move(table)) {}
  Element multiply(Element a, Element b) const override { return table_[static_cast<std::size_t>(a) * order_ + b]; }

 private:
  std::size_t order_;
  std::vector<Element> table_;
};

// Dihedral elements r^k s^e with s r s = r^-1.
class DihedralMultiplier final : public detail::Multiplier {
 public:
  DihedralMultiplier(std::uint64_t n, std::vector<std::uint32_t> code_of, std::vector<Element> index_of)
      : n_(n), code_of_(std::move(code_of)), index_of_(std::move(index_of)) {}
  Element multiply(Element a, Element b) const override { return index_of_[compose(code_of_[a], code_of_[b])]; }

  std::uint32_t compose(std::uint32_t x, std::uint32_t y) const {
    const std::uint64_t k1 = x % n_, e1 = x / n_;
    const std::uint64_t k2 = y % n_, e2 = y / n_;
    const std::uint64_t k = e1 == 0 ? (k1 + k2) % n_ : (k1 + n_ - k2) % n_;
    return static_cast<std::uint32_t>(((e1 ^ e2) * n_) + k);
  }

 private:
  std::uint64_t n_;
  std::vector<std::uint32_t> code_of_;
  std::vector<Element> index_of_;
};

class PermutationMultiplier final : public detail::Multiplier {
 public:
  explicit PermutationMultiplier(const State* state) : state_(state) {}
  Element multiply(Element a, Element b) const override {
    const std::size_t d = state_->degree;
    const std::uint16_t* ia = state_->images.data() + static_cast<std::size_t>(a) * d;
    const std::uint16_t* ib = state_->images.data() + static_cast<std::size_t>(b) * d;
    std::array<std::uint16_t, 64> small{};
    std::vector<std::uint16_t> large;
    std::uint16_t* out = small.data();
    if (d > small.size()) {
      large.resize(d);
      out = large.data();
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = ib[ia[i]];
    return *state_->perm_index->find(out);
  }

 private:
  const State* state_;
};

class ProductMultiplier final : public detail::Multiplier {
 public:
  explicit ProductMultiplier(std::vector<FiniteGroup> factors) : factors_(std::move(factors)) {}
  Element multiply(Element a, Element b) const override {
    std::uint64_t result = 0;
    std::uint64_t stride = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::uint64_t m = factors_[i].order();
      const auto ca = static_cast<Element>(a % m);
      const auto cb = static_cast<Element>(b % m);
      a = static_cast<Element>(a / m);
      b = static_cast<Element>(b / m);
      result += stride * factors_[i].multiply(ca, cb);
      stride *= m;
    }
    return static_cast<Element>(result);
  }

 private:
  std::vector<FiniteGroup> factors_;
};

[[noreturn]] void order_cap(std::uint64_t order, std::uint64_t cap) {
  throw Error(kModule, ErrorCode::kOrderCapExceeded,
              "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Orders, inverses, optional table and lookup indices; the backend must be set.
FiniteGroup finalize(std::shared_ptr<State> state, const BuildOptions& options) {
  const std::size_t n = state->order;
  if (n <= options.table_limit && n <= std::numeric_limits<std::uint16_t>::max()) {
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<std::uint16_t>(state->backend->multiply(static_cast<Element>(a), static_cast<Element>(b)));
      }
    }
    state->table = std::move(table);
  }
  state->orders.assign(n, 1);
  state->inverses.assign(n, 0);
  for (std::size_t x = 1; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    Element previous = 0;
    Element current = ex;
    std::uint64_t k = 1;
    while (current != 0) {
      previous = current;
      current = state->raw_multiply(current, ex);
      if (++k > n) throw Error(kModule, ErrorCode::kBadCayleyFile, "element of unbounded order");
    }
    state->orders[x] = k;
    state->inverses[x] = previous;
  }
  state->label_index.reserve(n);
  for (std::size_t x = 0; x < n; ++x) state->label_index.emplace(state->labels[x], static_cast<Element>(x));
  state->primes = prime_divisors(n);
  return FiniteGroup(std::move(state));
}

std::string dihedral_label(std::uint64_t k, std::uint64_t e) {
  std::string out;
  if (k == 1) out = "r";
  if (k > 1) out = "r^" + std::to_string(k);
  if (e == 1) out += out.empty() ? "s" : " s";
  return out.empty() ? "e" : out;
}

FiniteGroup build_cyclic(const GroupSpec& spec, const BuildOptions& options) {
  auto state = std::make_shared<State>();
  state->spec = spec;
  state->order = spec.n;
  state->labels.reserve(spec.n);
  for (std::uint64_t k = 0; k < spec.n; ++k) state->labels.push_back(std::to_string(k));
  state->backend = std::make_unique<CyclicMultiplier>(spec.n);
  return finalize(std::move(state), options);
}

FiniteGroup build_dihedral(const GroupSpec& spec, const BuildOptions& options) {
  const std::uint64_t n = spec.n;
  const std::uint64_t order = 2 * n;
  std::vector<Element> index_of(order, std::numeric_limits<Element>::max());
  std::vector<std::uint32_t> code_of;
  code_of.reserve(order);
  DihedralMultiplier raw(n, {}, {});
  std::vector<std::uint32_t> generators;
  const auto rotation = static_cast<std::uint32_t>(1 % n);
  if (rotation != 0) generators.push_back(rotation);
  generators.push_back(static_cast<std::uint32_t>(n));  // reflection s = (k=0, e=1)
  code_of.push_back(0);
  index_of[0] = 0;
  for (std::size_t head = 0; head < code_of.size(); ++head) {
    for (const auto g : generators) {
      const auto next = raw.compose(code_of[head], g);
      if (index_of[next] == std::numeric_limits<Element>::max()) {
        index_of[next] = static_cast<Element>(code_of.size());
        code_of.push_back(next);
      }
    }
  }
  auto state = std::make_shared<State>();
  state->spec = spec;
  state->order = order;
  for (const auto code : code_of) state->labels.push_back(dihedral_label(code % n, code / n));
  state->backend = std::make_unique<DihedralMultiplier>(n, std::move(code_of), std::move(index_of));
  return finalize(std::move(state), options);
}

FiniteGroup build_quaternion(const GroupSpec& spec, const BuildOptions& options) {
  // Index = 2 * basis + sign with basis 1, i, j, k and sign + / -.
  struct Signed {
    int basis;
    int sign;
  };
  static constexpr std::array<std::array<Signed, 4>, 4> kBasis = {{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Signed p = kBasis[a / 2][b / 2];
      const int sign = (a % 2) ^ (b % 2) ^ p.sign;
      table[a * 8 + b] = static_cast<Element>(2 * p.basis + sign);
    }
  }
  auto state = std::make_shared<State>();
  state->spec = spec;
  state->order = 8;
  state->labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  state->backend = std::make_unique<TableMultiplier>(8, std::move(table));
  return finalize(std::move(state), options);
}

template <class Mul>
std::optional<std::string> check_axioms(std::size_t n, Mul mul) {
  if (n == 0) return "empty group";
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) return "index 0 is not the identity (fails at " + std::to_string(x) + ")";
  }
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t z = mul(x, y);
      if (z >= n) return "product out of range";
      if (seen[z]) return "row " + std::to_string(x) + " is not a permutation";
      seen[z] = true;
    }
  }
  // Light's test: the elements a with (xa)y = x(ay) for all x, y are closed
  // under products, so it suffices to test a generating set.
  std::vector<std::size_t> generators;
  std::vector<bool> reached(n, false);
  auto reach = [&] {
    std::fill(reached.begin(), reached.end(), false);
    std::vector<std::size_t> queue{0};
    reached[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto g : generators) {
        const std::size_t z = mul(queue[head], g);
        if (!reached[z]) {
          reached[z] = true;
          queue.push_back(z);
        }
      }
    }
  };
  reach();
  for (std::size_t x = 0; x < n; ++x) {
    if (!reached[x]) {
      generators.push_back(x);
      reach();
    }
  }
  for (const auto g : generators) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xg = mul(x, g);
      for (std::size_t y = 0; y < n; ++y) {
        if (mul(xg, y) != mul(x, mul(g, y))) {
          return "associativity fails at (" + std::to_string(x) + ", " + std::to_string(g) + ", " +
                 std::to_string(y) + ")";
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y) has_inverse = mul(x, y) == 0 && mul(y, x) == 0;
    if (!has_inverse) return "element " + std::to_string(x) + " has no two-sided inverse";
  }
  return std::nullopt;
}

nlohmann::json read_json_file(const std::string& path, ErrorCode code) {
  std::ifstream in(path);
  if (!in) throw Error(kModule, code, "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(kModule, code, "'" + path + "': " + e.what());
  }
}

FiniteGroup build_cayley(const GroupSpec& spec, const BuildOptions& options) {
  const auto doc = read_json_file(spec.path, ErrorCode::kBadCayleyFile);
  auto bad = [&](const std::string& why) -> Error { return Error(kModule, ErrorCode::kBadCayleyFile, "'" + spec.path + "': " + why); };
  if (!doc.is_object() || doc.value("version", 0) != 1) throw bad("expected an object with version 1");
  if (!doc.contains("order") || !doc["order"].is_number_unsigned()) throw bad("missing order");
  const auto order = doc["order"].get<std::uint64_t>();
  if (order == 0) throw Error(kModule, ErrorCode::kInvalidOrder, "Cayley table of order 0");
  if (order > options.order_cap) order_cap(order, options.order_cap);
  const auto& rows = doc.at("table");
  if (!rows.is_array() || rows.size() != order) throw bad("table must have `order` rows");
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    if (!rows[i].is_array() || rows[i].size() != order) throw bad("row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < order; ++j) {
      if (!rows[i][j].is_number_unsigned() || rows[i][j].get<std::uint64_t>() >= order) throw bad("entry out of range");
      table[i * order + j] = rows[i][j].get<Element>();
    }
  }
  if (auto problem = check_axioms(order, [&](std::size_t a, std::size_t b) -> std::size_t { return table[a * order + b]; })) {
    throw bad(*problem);
  }
  auto state = std::make_shared<State>();
  state->spec = spec;
  state->order = order;
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != order) throw bad("labels must have `order` entries");
    for (const auto& l : labels) state->labels.push_back(l.get<std::string>());
  } else {
    for (std::size_t i = 0; i < order; ++i) state->labels.push_back("g" + std::to_string(i));
  }
  state->backend = std::make_unique<TableMultiplier>(order, std::move(table));
  return finalize(std::move(state), options);
}

FiniteGroup build_perm_file(const GroupSpec& spec, const BuildOptions& options) {
  const auto doc = read_json_file(spec.path, ErrorCode::kBadPermutationFile);
  auto bad = [&](const std::string& why) -> Error {
    return Error(kModule, ErrorCode::kBadPermutationFile, "'" + spec.path + "': " + why);
  };
  if (!doc.is_object() || doc.value("version", 0) != 1) throw bad("expected an object with version 1");
  if (!doc.contains("degree") || !doc["degree"].is_number_unsigned()) throw bad("missing degree");
  const auto degree = doc["degree"].get<std::size_t>();
  if (degree == 0 || degree > 65535) throw bad("degree out of range");
  std::vector<Permutation> generators;
  for (const auto& g : doc.at("generators")) {
    std::vector<std::uint16_t> images;
    for (const auto& v : g) images.push_back(v.get<std::uint16_t>());
    if (images.size() != degree) throw bad("generator of wrong length");
    try {
      generators.emplace_back(std::move(images));
    } catch (const Error&) {
      throw bad("generator is not a permutation");
    }
  }
  return permutation_group(degree, generators, options, spec);
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

FiniteGroup build_product(const GroupSpec& spec, const BuildOptions& options) {
  if (spec.factors.empty()) throw Error(kModule, ErrorCode::kSyntax, "empty direct product");
  std::vector<FiniteGroup> factors;
  std::uint64_t order = 1;
  for (const auto& f : spec.factors) {
    factors.push_back(build_group(f, options));
    order = saturating_mul(order, factors.back().order());
    if (order > options.order_cap) order_cap(order, options.order_cap);
  }
  auto state = std::make_shared<State>();
  state->spec = spec;
  state->order = order;
  state->labels.reserve(order);
  std::vector<Element> coords(factors.size(), 0);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) label += ',';
      label += factors[i].label(coords[i]);
    }
    label += ')';
    state->labels.push_back(std::move(label));
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++coords[i] < factors[i].order()) break;
      coords[i] = 0;
    }
  }
  state->backend = std::make_unique<ProductMultiplier>(std::move(factors));
  return finalize(std::move(state), options);
}

}  // namespace

FiniteGroup::FiniteGroup(std::shared_ptr<const State> state) : state_(std::move(state)) {}

std::size_t FiniteGroup::order() const noexcept { return state_->order; }

Element FiniteGroup::multiply(Element a, Element b) const { return state_->raw_multiply(a, b); }

Element FiniteGroup::inverse(Element x) const { return state_->inverses[x]; }

Element FiniteGroup::power(Element x, std::uint64_t exponent) const {
  exponent %= state_->orders[x];
  Element result = identity();
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base);
    base = multiply(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Element x) const { return state_->orders[x]; }

const std::string& FiniteGroup::label(Element x) const { return state_->labels[x]; }

const std::vector<std::string>& FiniteGroup::labels() const noexcept { return state_->labels; }

std::optional<Element> FiniteGroup::find(std::string_view label) const {
  const auto it = state_->label_index.find(std::string(label));
  if (it != state_->label_index.end()) return it->second;
  if (!is_permutation_group()) return std::nullopt;
  try {
    return find(Permutation::parse_cycles(label, state_->degree));
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool FiniteGroup::is_permutation_group() const noexcept { return state_->perm_index != nullptr; }

std::size_t FiniteGroup::degree() const noexcept { return state_->degree; }

Permutation FiniteGroup::permutation(Element x) const {
  if (!is_permutation_group()) throw Error(kModule, ErrorCode::kInvalidArgument, "not a permutation group");
  const auto* first = state_->images.data() + static_cast<std::size_t>(x) * state_->degree;
  return Permutation(std::vector<std::uint16_t>(first, first + state_->degree));
}

std::optional<Element> FiniteGroup::find(const Permutation& perm) const {
  if (!is_permutation_group() || perm.degree() != state_->degree) return std::nullopt;
  return state_->perm_index->find(perm.images().data());
}

bool FiniteGroup::has_table() const noexcept { return !state_->table.empty(); }

const GroupSpec& FiniteGroup::spec() const noexcept { return state_->spec; }

std::string FiniteGroup::name() const { return render_group_spec(state_->spec); }

const std::vector<std::uint64_t>& FiniteGroup::primes() const noexcept { return state_->primes; }

FiniteGroup permutation_group(std::size_t degree, const std::vector<Permutation>& generators,
                              const BuildOptions& options, GroupSpec spec) {
  auto state = std::make_shared<State>();
  state->spec = std::move(spec);
  state->degree = degree;
  state->perm_index = std::make_unique<PermutationIndex>(degree);
  std::vector<const Permutation*> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(kModule, ErrorCode::kInvalidArgument, "generator degree mismatch");
    if (!g.is_identity()) gens.push_back(&g);
  }
  auto& images = state->images;
  Permutation identity(degree);
  images.insert(images.end(), identity.images().begin(), identity.images().end());
  state->perm_index->insert(images.data(), 0);
  std::vector<std::uint16_t> scratch(degree);
  std::size_t count = 1;
  for (std::size_t head = 0; head < count; ++head) {
    for (const Permutation* g : gens) {
      const std::uint16_t* current = images.data() + head * degree;
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = (*g)(current[i]);
      if (!state->perm_index->find(scratch.data())) {
        if (count + 1 > options.order_cap) order_cap(count + 1, options.order_cap);
        state->perm_index->insert(scratch.data(), static_cast<Element>(count));
        images.insert(images.end(), scratch.begin(), scratch.end());
        ++count;
      }
    }
  }
  state->order = count;
  state->labels.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    const auto* first = images.data() + x * degree;
    state->labels.push_back(Permutation(std::vector<std::uint16_t>(first, first + degree)).to_cycle_string());
  }
  state->backend = std::make_unique<PermutationMultiplier>(state.get());
  return finalize(std::move(state), options);
}

std::optional<std::uint64_t> announced_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic: return spec.n;
    case GroupSpec::Kind::kSymmetric: return factorial(spec.n);
    case GroupSpec::Kind::kAlternating: return spec.n < 2 ? 1 : factorial(spec.n) / 2;
    case GroupSpec::Kind::kDihedral: return saturating_mul(2, spec.n);
    case GroupSpec::Kind::kQuaternion8: return 8;
    case GroupSpec::Kind::kDirectProduct: {
      std::uint64_t order = 1;
      for (const auto& f : spec.factors) {
        const auto o = announced_order(f);
        if (!o) return std::nullopt;
        order = saturating_mul(order, *o);
      }
      return order;
    }
    case GroupSpec::Kind::kCayleyTable:
    case GroupSpec::Kind::kPermGenerators: return std::nullopt;
  }
  return std::nullopt;
}

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& options) {
  if (const auto order = announced_order(spec); order && *order > options.order_cap) {
    order_cap(*order, options.order_cap);
  }
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic: return build_cyclic(spec, options);
    case GroupSpec::Kind::kDihedral: return build_dihedral(spec, options);
    case GroupSpec::Kind::kQuaternion8: return build_quaternion(spec, options);
    case GroupSpec::Kind::kCayleyTable: return build_cayley(spec, options);
    case GroupSpec::Kind::kPermGenerators: return build_perm_file(spec, options);
    case GroupSpec::Kind::kDirectProduct: return build_product(spec, options);
    case GroupSpec::Kind::kSymmetric: {
      const std::size_t n = spec.n;
      std::vector<Permutation> gens;
      if (n >= 2) {
        gens.push_back(Permutation::cycle({1, 2}, n));
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
        gens.push_back(Permutation::cycle(all, n));
      }
      return permutation_group(n, gens, options, spec);
    }
    case GroupSpec::Kind::kAlternating: {
      const std::size_t n = spec.n;
      std::vector<Permutation> gens;
      if (n >= 3) {
        gens.push_back(Permutation::cycle({1, 2, 3}, n));
        std::vector<std::size_t> points;
        for (std::size_t i = (n % 2 == 1 ? 1 : 2); i <= n; ++i) points.push_back(i);
        gens.push_back(Permutation::cycle(points, n));
      }
      return permutation_group(n, gens, options, spec);
    }
  }
  throw Error(kModule, ErrorCode::kSyntax, "unknown group kind");
}

FiniteGroup build_group(std::string_view spec_text, const BuildOptions& options) {
  return build_group(parse_group_spec(spec_text), options);
}

std::optional<std::string> check_group_laws(const FiniteGroup& group) {
  return check_axioms(group.order(), [&](std::size_t a, std::size_t b) -> std::size_t {
    return group.multiply(static_cast<Element>(a), static_cast<Element>(b));
  });
}

}  // namespace ggx
