#include "ggx/tools/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "ggx/error.hpp"
#include "ggx/groups.hpp"
#include "ggx/isomorphism.hpp"
#include "ggx/number_theory.hpp"
#include "ggx/perfect.hpp"
#include "ggx/power_graphs.hpp"
#include "ggx/reconstruct.hpp"
#include "ggx/tools/oracles.hpp"

namespace ggx::tools {

namespace {

// Collects failures; the first few are kept verbatim for the report.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) notes_.push_back(what);
  }
  std::size_t failures() const { return failures_; }
  std::string summary(const std::string& passed) const {
    if (failures_ == 0) return passed;
    std::string out = std::to_string(failures_) + " failure(s)";
    for (const auto& note : notes_) out += "; " + note;
    return out;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

void note(const SuiteOptions& options, const std::string& line) {
  if (options.progress) *options.progress << "  " << line << '\n' << std::flush;
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

struct GroupGraphs {
  FiniteGroup group;
  Graph power;
};

GroupGraphs load(const std::string& spec) {
  auto group = build_group(spec);
  auto power = ggx::power_graph(group);
  return {std::move(group), std::move(power)};
}

bool trivial_center(const Graph& power) { return center_of_finite_component(power).trivial; }

// 1. reconstruct_enhanced(power) equals the enhanced power graph exactly.
CriterionResult reconstruction_exactness(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  for (const auto& spec : options.corpus) {
    const auto [group, power] = load(spec);
    const auto enhanced = enhanced_power_graph(group);
    const auto rebuilt = reconstruct_enhanced(power);
    if (!rebuilt.same_edges(enhanced)) {
      std::size_t missing = 0, extra = 0;
      for (Vertex x = 0; x < group.order(); ++x) {
        for (Vertex y = x + 1; y < group.order(); ++y) {
          if (enhanced.adjacent(x, y) && !rebuilt.adjacent(x, y)) ++missing;
          if (!enhanced.adjacent(x, y) && rebuilt.adjacent(x, y)) ++extra;
        }
      }
      tally.fail(spec + ": " + std::to_string(missing) + " missing, " + std::to_string(extra) + " extra edges");
    }
  }
  r.pass = tally.failures() == 0;
  r.detail = tally.summary(std::to_string(options.corpus.size()) + " groups, all edge sets equal");
  return r;
}

// 2. Reconstruction commutes with random relabelings.
CriterionResult canonicality(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::mt19937_64 rng(options.seed);
  std::size_t trials = 0;
  for (const auto& spec : options.corpus) {
    const auto [group, power] = load(spec);
    const auto base = reconstruct_enhanced(power);
    for (std::size_t t = 0; t < kRelabelingsPerGroup; ++t) {
      const auto perm = random_permutation(group.order(), rng);
      ++trials;
      if (!reconstruct_enhanced(relabel(power, perm)).same_edges(relabel(base, perm))) {
        tally.fail(spec + " relabeling " + std::to_string(t));
      }
    }
  }
  r.pass = tally.failures() == 0;
  r.detail = tally.summary(std::to_string(trials) + " relabelings over " + std::to_string(options.corpus.size()) +
                           " groups commute");
  return r;
}

// 3. Directed reconstruction up to isomorphism, plus the arrow-test audits.
CriterionResult directed_reconstruction(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::size_t groups = 0, equal_arcs = 0, pairs = 0;
  for (const auto& spec : options.corpus) {
    const auto [group, power] = load(spec);
    if (group.order() > kDirectedMaxOrder || !trivial_center(power)) continue;
    ++groups;
    const auto truth = oracle::directed_power_graph(group);
    const auto rebuilt = reconstruct_directed(power);
    const auto classes = graph_classes(power);
    const bool all_simple =
        std::none_of(classes.types.begin(), classes.types.end(), [](const ClassType& t) { return t.complex; });
    if (all_simple) {
      if (rebuilt.same_arcs(truth)) {
        ++equal_arcs;
      } else {
        tally.fail(spec + ": arc sets differ although every class is simple");
      }
    }
    if (!digraph_isomorphic(rebuilt, truth)) tally.fail(spec + ": not isomorphic to the directed power graph");

    // Arrow soundness and asymmetry on every admissible ordered pair.
    const std::size_t n = group.order();
    for (Vertex z = 0; z < n; ++z) {
      if (z == classes.identity || !classes.is_simple(z)) continue;
      for (Vertex x = 0; x < n; ++x) {
        if (x == z || x == classes.identity || !classes.is_simple(x)) continue;
        ++pairs;
        const bool arrow = arrow_test(power, classes, z, x);
        if (arrow != truth.has_arc(z, x)) {
          tally.fail(spec + ": arrow test wrong for " + group.label(z) + " -> " + group.label(x));
        }
        if (arrow && arrow_test(power, classes, x, z) && classes.equiv.class_of[x] != classes.equiv.class_of[z]) {
          tally.fail(spec + ": arrows both ways between different classes " + group.label(z) + ", " + group.label(x));
        }
      }
    }
  }
  r.pass = tally.failures() == 0 && groups > 0;
  r.detail = tally.summary(std::to_string(groups) + " trivial-center groups isomorphic (" +
                           std::to_string(equal_arcs) + " with equal arc sets), " + std::to_string(pairs) +
                           " arrow tests match the group");
  return r;
}

PerfectnessVerdict verdict_for(const Graph& enhanced, const SuiteOptions& options) {
  PerfectnessOptions po;
  po.budget = options.budget;
  po.jobs = options.jobs;
  return perfectness_verdict(enhanced, po);
}

std::string trace_text(const PerfectnessVerdict& v) {
  std::string out;
  for (const auto& step : v.trace) out += (out.empty() ? "" : " ") + std::to_string(step.vertices);
  return out;
}

const std::vector<std::string> kS8Pentagon = {"(1 2 3 4 5)", "(6 7 8)", "(1 2)", "(3 4 5)", "(6 7)"};
const std::vector<std::string> kA9Heptagon = {"(1 2 3 4 5)", "(7 8 9)",      "(1 2)(3 4)", "(5 6 7)",
                                              "(1 2)(8 9)",  "(3 4 5)",      "(6 7)(8 9)"};
// a1 b1, b1 c2, a2, b2, a1 c1 with a_i, b_i, c_i of orders 2, 3, 5 in the two factors.
const std::vector<std::string> kC30Pentagon = {"(25,0)", "(10,6)", "(0,15)", "(0,10)", "(21,0)"};

// 4. Verdicts for the symmetric and alternating groups.
CriterionResult verdict_table(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::ostringstream table;
  for (const char family : {'S', 'A'}) {
    for (int n = 3; n <= 8; ++n) {
      const std::string spec = std::string(1, family) + std::to_string(n);
      const auto group = build_group(spec);
      const auto enhanced = enhanced_power_graph(group, kVerdictGraphCap);
      const auto start = std::chrono::steady_clock::now();
      const auto v = verdict_for(enhanced, options);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool expect_perfect = family == 'A' || n <= 7;
      const auto want = expect_perfect ? PerfectStatus::kPerfect : PerfectStatus::kImperfect;
      table << spec << '=' << to_string(v.status) << ' ';
      note(options, spec + ": " + to_string(v.status) + " [" + trace_text(v) + "] steps " +
                        std::to_string(v.budget_spent) + ", " + std::to_string(secs) + " s");
      if (v.status != want) tally.fail(spec + " is " + to_string(v.status));
      if (v.status == PerfectStatus::kImperfect) {
        if (!v.witness || validate_witness(enhanced, *v.witness)) {
          tally.fail(spec + ": witness does not validate");
        } else {
          std::vector<Element> cycle(v.witness->vertices.begin(), v.witness->vertices.end());
          if (v.witness->kind == HoleKind::kHole && !witness_check(group, cycle, cycle.size())) {
            tally.fail(spec + ": witness rejected by the pairwise group check");
          }
        }
      }
    }
  }

  // Second route for S7 and A8: the removals replayed, the expected orders
  // checked, and for S7 the plain hole search on the reduced graph.
  for (const std::string spec : {"S7", "A8"}) {
    const auto group = build_group(spec);
    const auto enhanced = enhanced_power_graph(group);
    const auto [quotient, map] = twin_quotient(enhanced);
    const auto reduced = clique_neighborhood_reduction(quotient);
    if (const auto problem = audit_removal_log(quotient, reduced.removed)) tally.fail(spec + ": " + *problem);
    std::vector<bool> removed(quotient.vertex_count(), false);
    for (const Vertex v : reduced.removed) removed[v] = true;
    const std::set<std::uint64_t> orders = spec == "S7" ? std::set<std::uint64_t>{5, 7, 10}
                                                        : std::set<std::uint64_t>{5, 7, 15};
    for (Element x = 0; x < group.order(); ++x) {
      if (orders.count(group.element_order(x)) && !removed[map.class_of[x]]) {
        tally.fail(spec + ": " + group.label(x) + " survived clique-neighborhood removal");
        break;
      }
    }
    note(options, spec + ": " + std::to_string(reduced.removed.size()) + " removals replayed, " +
                      std::to_string(reduced.graph.vertex_count()) + " vertices remain");
    if (spec == "S7") {
      HoleSearchOptions ho;
      ho.budget = options.budget;
      ho.jobs = options.jobs;
      const auto holes = find_odd_hole(reduced.graph, ho);
      ho.min_length = 7;
      ho.budget = options.budget - holes.steps;
      const auto antiholes = find_odd_hole(complement(reduced.graph), ho);
      note(options, "S7 direct search: holes " + std::to_string(holes.steps) + " steps, antiholes " +
                        std::to_string(antiholes.steps) + " steps");
      if (holes.status != SearchStatus::kNone || antiholes.status != SearchStatus::kNone) {
        tally.fail("S7 direct search on the reduced graph did not finish clean");
      }
    }
  }

  const auto a9 = build_group("A9");
  if (!witness_check(a9, kA9Heptagon, 7)) tally.fail("A9 heptagon rejected");
  r.pass = tally.failures() == 0;
  r.detail = tally.summary(table.str() + "A9 heptagon validated");
  return r;
}

// 5. Explicit counterexamples.
CriterionResult counterexamples(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  const auto c30 = build_group("C30xC30");
  const auto enhanced = enhanced_power_graph(c30);
  const auto v = verdict_for(enhanced, options);
  if (v.status != PerfectStatus::kImperfect || !v.witness) {
    tally.fail("C30xC30 is " + to_string(v.status));
  } else if (validate_witness(enhanced, *v.witness) || v.witness->vertices.size() != 5 ||
             v.witness->kind != HoleKind::kHole) {
    tally.fail("C30xC30 witness is not a validated 5-hole");
  }
  if (!witness_check(c30, kC30Pentagon, 5)) tally.fail("C30xC30 pentagon a1b1, b1c2, a2, b2, a1c1 rejected");
  std::vector<Vertex> pentagon;
  for (const auto& label : kC30Pentagon) pentagon.push_back(*c30.find(label));
  if (validate_witness(enhanced, {HoleKind::kHole, pentagon})) tally.fail("C30xC30 pentagon not induced in the graph");

  const auto s8 = build_group("S8");
  if (!witness_check(s8, kS8Pentagon, 5)) tally.fail("S8 pentagon rejected");
  const std::vector<std::string> short_cycle(kS8Pentagon.begin(), kS8Pentagon.begin() + 3);
  if (witness_check(s8, short_cycle, 3)) tally.fail("S8 three-element request accepted");
  const auto a9 = build_group("A9");
  if (!witness_check(a9, kA9Heptagon, 7)) tally.fail("A9 heptagon rejected");
  r.pass = tally.failures() == 0;
  std::string found;
  if (v.witness) {
    for (const Vertex x : v.witness->vertices) found += (found.empty() ? "" : " ") + c30.label(x);
  }
  r.detail = tally.summary("C30xC30 5-hole [" + found + "], explicit C30xC30 pentagon, S8 pentagon, A9 heptagon validated");
  return r;
}

// 6. Sufficient condition and nilpotent criterion against computed verdicts.
CriterionResult perfectness_audits(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::size_t holds = 0, nilpotent = 0;
  for (const auto& spec : options.corpus) {
    const auto group = build_group(spec);
    const auto v = verdict_for(enhanced_power_graph(group), options);
    const bool perfect = v.status == PerfectStatus::kPerfect;
    if (v.status == PerfectStatus::kUnknown) tally.fail(spec + ": verdict unknown");
    const auto condition = sufficient_condition_check(group);
    if (condition.holds) {
      ++holds;
      if (!perfect) tally.fail(spec + ": condition holds but verdict is " + to_string(v.status));
    }
    const auto report = nilpotent_report(group);
    if (report.predicted_perfect) {
      ++nilpotent;
      if (*report.predicted_perfect != perfect) {
        tally.fail(spec + ": nilpotent prediction " + std::string(*report.predicted_perfect ? "perfect" : "imperfect") +
                   " but verdict is " + to_string(v.status));
      }
    }
  }
  const auto a5 = build_group("A5");
  const bool a5_regression = !sufficient_condition_check(a5).holds &&
                             verdict_for(enhanced_power_graph(a5), options).status == PerfectStatus::kPerfect;
  if (!a5_regression) tally.fail("A5 regression: expected failing condition and perfect verdict");
  r.pass = tally.failures() == 0;
  r.detail = tally.summary(std::to_string(holds) + " groups satisfy the condition, " + std::to_string(nilpotent) +
                           " nilpotent predictions, all consistent; A5 regression holds");
  return r;
}

struct Decomposition {
  std::vector<Graph> factors;
  std::vector<std::vector<Vertex>> image;  // element -> factor coordinates
};

Decomposition decompose(const FiniteGroup& group, const Graph& enhanced) {
  Decomposition d;
  std::vector<std::vector<Vertex>> position;
  for (const auto p : group.primes()) {
    const auto members = p_elements(group, p);
    std::vector<Vertex> vertices(members.begin(), members.end());
    std::vector<Vertex> pos(group.order(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<Vertex>(i);
    d.factors.push_back(induced_subgraph(enhanced, vertices));
    position.push_back(std::move(pos));
  }
  d.image.resize(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    const auto parts = prime_power_decomposition(group, x);
    for (std::size_t i = 0; i < parts.size(); ++i) d.image[x].push_back(position[i][parts[i]]);
  }
  return d;
}

// 7. Embedding into the strong product of the Sylow-part graphs.
CriterionResult embedding(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::size_t groups = 0, reflect_failures = 0, preserve_failures = 0, groups_failing = 0;
  std::string first_reflect;
  for (const auto& spec : options.corpus) {
    const auto group = build_group(spec);
    if (group.primes().size() < 2 || group.order() > kEmbeddingMaxOrder) continue;
    ++groups;
    const auto enhanced = enhanced_power_graph(group);
    const auto d = decompose(group, enhanced);
    std::set<std::vector<Vertex>> seen(d.image.begin(), d.image.end());
    if (seen.size() != group.order()) tally.fail(spec + ": decomposition is not injective");
    bool group_ok = true;
    for (Element x = 0; x < group.order(); ++x) {
      for (Element y = x + 1; y < group.order(); ++y) {
        const bool in_group = enhanced.adjacent(x, y);
        const bool in_product = strong_product_adjacent(d.factors, d.image[x], d.image[y]);
        if (in_group && !in_product) {
          ++preserve_failures;
          group_ok = false;
        }
        if (!in_group && in_product) {
          if (first_reflect.empty()) first_reflect = spec + " (" + group.label(x) + ", " + group.label(y) + ")";
          ++reflect_failures;
          group_ok = false;
        }
      }
    }
    if (!group_ok) ++groups_failing;
  }
  if (preserve_failures > 0) tally.fail(std::to_string(preserve_failures) + " adjacent pairs not preserved");
  if (reflect_failures > 0) {
    tally.fail(std::string(preserve_failures == 0 ? "injective and adjacency-preserving, but " : "") +
               std::to_string(reflect_failures) + " non-adjacent pairs with adjacent images in " +
               std::to_string(groups_failing) + " groups, first " + first_reflect);
  }

  for (const std::string spec : {"S3", "C4xC2xC3"}) {
    const auto group = build_group(spec);
    const auto d = decompose(group, enhanced_power_graph(group));
    const auto product = strong_product(d.factors);
    BergeOptions bo;
    bo.budget = options.budget;
    const auto berge = is_berge(product, bo);
    note(options, spec + ": product of " + std::to_string(product.vertex_count()) + " vertices is " +
                      to_string(berge.verdict));
    if (berge.verdict != BergeVerdict::kBerge) tally.fail(spec + ": strong product is " + to_string(berge.verdict));
  }
  r.pass = tally.failures() == 0;
  r.detail = tally.summary(std::to_string(groups) + " groups embed; S3 and C4xC2xC3 products are Berge");
  return r;
}

// 8. Dual oracles for the enhanced graph and for the Berge machinery.
CriterionResult oracle_equivalences(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::mt19937_64 rng(options.seed);
  std::size_t pair_checks = 0;
  for (const auto& spec : options.corpus) {
    const auto group = build_group(spec);
    const auto enhanced = enhanced_power_graph(group);
    const std::size_t n = group.order();
    auto check = [&](Element x, Element y) {
      ++pair_checks;
      if (is_cyclic_pair(group, x, y) != enhanced.adjacent(x, y)) {
        tally.fail(spec + ": pair (" + group.label(x) + ", " + group.label(y) + ")");
      }
    };
    if (n <= kExhaustivePairMaxOrder) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) check(x, y);
      }
    } else {
      for (std::size_t i = 0; i < kSampledPairs; ++i) {
        const auto x = static_cast<Element>(rng() % n), y = static_cast<Element>(rng() % n);
        if (x != y) check(x, y);
      }
    }
  }

  std::size_t imperfect = 0;
  for (std::size_t t = 0; t < options.random_graphs; ++t) {
    const std::size_t n = 1 + rng() % kRandomGraphMaxVertices;
    const double density = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (coin(rng)) g.add_edge(i, j);
      }
    }
    const std::string tag = "graph #" + std::to_string(t);
    const bool berge = oracle::is_berge(g);
    if (!berge) ++imperfect;
    for (const std::size_t length : {std::size_t{5}, std::size_t{7}}) {
      HoleSearchOptions ho;
      ho.min_length = length;
      const auto holes = find_odd_hole(g, ho);
      if ((holes.status == SearchStatus::kFound) != oracle::has_odd_hole(g, length)) {
        tally.fail(tag + ": hole search (min " + std::to_string(length) + ") disagrees");
      }
      if (holes.status == SearchStatus::kFound &&
          (validate_witness(g, {HoleKind::kHole, holes.cycle}) || holes.cycle.size() < length)) {
        tally.fail(tag + ": invalid hole witness");
      }
    }
    const auto b = is_berge(g);
    if ((b.verdict == BergeVerdict::kBerge) != berge || (b.witness && validate_witness(g, *b.witness))) {
      tally.fail(tag + ": is_berge disagrees");
    }
    const auto quotient = twin_quotient(g).first;
    if (oracle::is_berge(quotient) != berge) tally.fail(tag + ": twin quotient changes the verdict");
    if (oracle::is_berge(clique_neighborhood_reduction(g).graph) != berge) {
      tally.fail(tag + ": clique-neighborhood removal changes the verdict");
    }
    if (oracle::is_berge(clique_neighborhood_reduction(quotient).graph) != berge) {
      tally.fail(tag + ": composed reductions change the verdict");
    }
    const auto v = perfectness_verdict(g);
    if ((v.status == PerfectStatus::kPerfect) != berge || (v.witness && validate_witness(g, *v.witness))) {
      tally.fail(tag + ": verdict pipeline disagrees");
    }
  }
  r.pass = tally.failures() == 0;
  r.detail = tally.summary(std::to_string(pair_checks) + " group pairs agree; " +
                           std::to_string(options.random_graphs) + " random graphs (" + std::to_string(imperfect) +
                           " not Berge) agree with subset enumeration");
  return r;
}

// 9. Class types against group data, and equal neighborhoods on complex classes.
CriterionResult class_machinery(const SuiteOptions& options) {
  CriterionResult r;
  Tally tally;
  std::size_t groups = 0, complex_classes = 0, complex_vertices = 0;
  for (const auto& spec : options.corpus) {
    const auto [group, power] = load(spec);
    const auto approx = approx_classes(group);
    const auto equiv = equiv_classes(power);
    if (!approx.refines(equiv)) tally.fail(spec + ": ≈ does not refine ≡");
    for (const auto& c : approx.classes) {
      if (c.size() != euler_phi(group.element_order(c.front()))) tally.fail(spec + ": |[x]≈| != φ(o(x))");
    }
    if (!trivial_center(power)) continue;
    ++groups;
    const auto types = classify_classes(power, equiv);
    if (const auto problem = oracle::check_class_types(group, equiv, types)) tally.fail(spec + ": " + *problem);
    const auto enhanced = enhanced_power_graph(group);
    for (std::size_t c = 0; c < equiv.size(); ++c) {
      if (!types[c].complex) continue;
      ++complex_classes;
      for (const Vertex x : equiv.classes[c]) {
        ++complex_vertices;
        if (!(closed_neighborhood(power, x) == closed_neighborhood(enhanced, x))) {
          tally.fail(spec + ": " + group.label(x) + " has different neighborhoods");
        }
      }
    }
  }
  r.pass = tally.failures() == 0 && groups > 0;
  r.detail = tally.summary(std::to_string(groups) + " trivial-center groups typed correctly; " +
                           std::to_string(complex_classes) + " complex classes, " + std::to_string(complex_vertices) +
                           " vertices with equal neighborhoods");
  return r;
}

}  // namespace

std::string criterion_title(int id) {
  switch (id) {
    case 1:
      return "Reconstruction exactness";
    case 2:
      return "Canonicality under relabeling";
    case 3:
      return "Directed reconstruction";
    case 4:
      return "Symmetric and alternating verdicts";
    case 5:
      return "Counterexamples";
    case 6:
      return "Perfectness audits";
    case 7:
      return "Embedding and strong product";
    case 8:
      return "Oracle equivalences";
    case 9:
      return "Class machinery";
    default:
      break;
  }
  throw Error("cli", ErrorCode::kInvalidArgument, "no criterion " + std::to_string(id));
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  const std::string title = criterion_title(id);
  try {
    switch (id) {
      case 1:
        r = reconstruction_exactness(options);
        break;
      case 2:
        r = canonicality(options);
        break;
      case 3:
        r = directed_reconstruction(options);
        break;
      case 4:
        r = verdict_table(options);
        break;
      case 5:
        r = counterexamples(options);
        break;
      case 6:
        r = perfectness_audits(options);
        break;
      case 7:
        r = embedding(options);
        break;
      case 8:
        r = oracle_equivalences(options);
        break;
      default:
        r = class_machinery(options);
        break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("aborted: ") + e.what();
  }
  r.id = id;
  r.title = title;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "reconstruction") return {1, 2, 3, 9};
  if (suite == "perfectness") return {4, 5, 6};
  if (suite == "embedding") return {7};
  if (suite == "reductions") return {8};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  throw Error("cli", ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace ggx::tools
