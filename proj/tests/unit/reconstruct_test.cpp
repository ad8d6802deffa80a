#include <set>

#include "ggx/groups.hpp"
#include "ggx/isomorphism.hpp"
#include "ggx/number_theory.hpp"
#include "ggx/power_graphs.hpp"
#include "ggx/reconstruct.hpp"
#include "ggx/tools/corpus.hpp"
#include "ggx/tools/oracles.hpp"
#include "support.hpp"

namespace ggx {
namespace {

using test::el;

TEST(CenterCase, Examples) {
  const auto c6 = classify_center_case(power_graph(build_group("C6")));
  EXPECT_EQ(c6.tag, CenterCaseTag::kCyclicPQ);
  EXPECT_EQ(c6.center, (std::vector<Vertex>{0, 1, 5}));
  const auto c12 = classify_center_case(power_graph(build_group("C12")));
  EXPECT_EQ(c12.tag, CenterCaseTag::kCyclicOther);
  EXPECT_EQ(c12.center, (std::vector<Vertex>{0, 1, 5, 7, 11}));
  const auto q8 = classify_center_case(power_graph(build_group("Q8")));
  EXPECT_EQ(q8.tag, CenterCaseTag::kPGroup);
  EXPECT_EQ(q8.center.size(), 2U);
  EXPECT_EQ(classify_center_case(power_graph(build_group("C9"))).tag, CenterCaseTag::kCyclicPrimePower);
  EXPECT_EQ(classify_center_case(power_graph(build_group("S3"))).tag, CenterCaseTag::kTrivialCenter);
  EXPECT_EQ(to_string(CenterCaseTag::kCyclicPQ), "cyclic-pq");
}

TEST(CenterCase, MatchesGroupStructureOnCorpus) {
  for (const auto& spec : tools::default_corpus()) {
    const auto g = build_group(spec);
    const auto c = classify_center_case(power_graph(g));
    if (c.center.size() <= 1) {
      EXPECT_EQ(c.tag, CenterCaseTag::kTrivialCenter) << spec;
      continue;
    }
    bool cyclic = false;
    for (Element x = 0; x < g.order() && !cyclic; ++x) cyclic = g.element_order(x) == g.order();
    const auto primes = prime_divisors(g.order());
    const bool prime_power = primes.size() == 1;
    const bool pq = primes.size() == 2 && primes[0] * primes[1] == g.order();
    CenterCaseTag expected = CenterCaseTag::kPGroup;
    if (cyclic && prime_power) {
      expected = CenterCaseTag::kCyclicPrimePower;
    } else if (cyclic && pq) {
      expected = CenterCaseTag::kCyclicPQ;
    } else if (cyclic) {
      expected = CenterCaseTag::kCyclicOther;
    }
    EXPECT_EQ(c.tag, expected) << spec;
    if (expected == CenterCaseTag::kPGroup) EXPECT_TRUE(prime_power) << spec;
  }
}

TEST(CenterCase, RejectsNonPowerGraphs) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_EQ(test::error_code([&] { classify_center_case(g); }), ErrorCode::kNotAPowerGraph);
}

TEST(ArrowTest, Examples) {
  const auto s5 = build_group("S5");
  const auto pg = power_graph(s5);
  const auto classes = graph_classes(pg);
  const auto z = el(s5, "(1 2 3)(4 5)"), x = el(s5, "(1 3 2)");
  EXPECT_TRUE(arrow_test(pg, classes, z, x));
  EXPECT_FALSE(arrow_test(pg, classes, x, z));
  const auto truth = oracle::directed_power_graph(s5);
  EXPECT_TRUE(truth.has_arc(z, x));
  EXPECT_FALSE(truth.has_arc(x, z));
  // Same ≈-class: (1 2 3) and (1 3 2) are powers of each other.
  EXPECT_TRUE(arrow_test(pg, classes, el(s5, "(1 2 3)"), x));
  EXPECT_EQ(test::error_code([&] { arrow_test(pg, classes, 0, x); }), ErrorCode::kPreconditionViolated);
}

TEST(ReconstructEnhanced, Examples) {
  const auto c6 = power_graph(build_group("C6"));
  ASSERT_EQ(c6.edge_count(), 13U);
  const auto k6 = reconstruct_enhanced(c6);
  EXPECT_TRUE(k6.same_edges(test::complete_graph(6)));

  const auto q8 = power_graph(build_group("Q8"));
  EXPECT_EQ(reconstruct_enhanced(q8), q8);

  const auto s5 = build_group("S5");
  const auto pg = power_graph(s5);
  const auto rebuilt = reconstruct_enhanced(pg);
  EXPECT_TRUE(rebuilt.same_edges(enhanced_power_graph(s5)));
  EXPECT_TRUE(rebuilt.adjacent(el(s5, "(1 3 2)"), el(s5, "(4 5)")));
  EXPECT_EQ(rebuilt.labels(), pg.labels());
}

TEST(ReconstructEnhanced, WorksWithoutGroupLabels) {
  // Only the structure of the input is used.
  for (const auto* spec : {"S4", "D6", "A5", "C12", "C4xC2"}) {
    const auto g = build_group(spec);
    const auto pg = power_graph(g);
    Graph bare(pg.vertex_count());
    for (const auto& [u, v] : pg.edges()) bare.add_edge(u, v);
    EXPECT_TRUE(reconstruct_enhanced(bare).same_edges(enhanced_power_graph(g))) << spec;
  }
}

TEST(ReconstructDirected, Examples) {
  const auto s3 = build_group("S3");
  const auto d3 = reconstruct_directed(power_graph(s3));
  EXPECT_EQ(d3.arc_count(), 7U);
  EXPECT_TRUE(digraph_isomorphic(d3, directed_power_graph(s3)));
  const auto d4 = build_group("D4");
  EXPECT_TRUE(digraph_isomorphic(reconstruct_directed(power_graph(d4)), directed_power_graph(d4)));
  EXPECT_EQ(test::error_code([] { reconstruct_directed(test::complete_graph(6)); }),
            ErrorCode::kUnsupportedCenterCase);
}

TEST(ReconstructDirected, ApproxPartitionHasGroupShape) {
  for (const auto* spec : {"D4", "D8", "S4", "D16", "C4xC2"}) {
    const auto g = build_group(spec);
    const auto pg = power_graph(g);
    if (!center_of_finite_component(pg).trivial) continue;
    const auto classes = graph_classes(pg);
    const auto rebuilt = reconstructed_approx_classes(classes);
    const auto truth = approx_classes(g);
    ASSERT_TRUE(rebuilt.refines(classes.equiv)) << spec;
    std::multiset<std::size_t> a, b;
    for (const auto& c : rebuilt.classes) a.insert(c.size());
    for (const auto& c : truth.classes) b.insert(c.size());
    EXPECT_EQ(a, b) << spec;
  }
}

}  // namespace
}  // namespace ggx
