#include <map>
#include <set>

#include "ggx/groups.hpp"
#include "ggx/number_theory.hpp"
#include "ggx/power_graphs.hpp"
#include "ggx/tools/corpus.hpp"
#include "ggx/tools/oracles.hpp"
#include "support.hpp"

namespace ggx {
namespace {

using test::el;

std::vector<std::vector<std::string>> class_labels(const FiniteGroup& g, const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : p.classes) {
    out.emplace_back();
    for (const Vertex v : c) out.back().push_back(g.label(v));
  }
  return out;
}

TEST(DirectedPowerGraph, Examples) {
  const auto d = directed_power_graph(build_group("C3"));
  EXPECT_EQ(d.arcs(), (std::vector<Edge>{{1, 0}, {1, 2}, {2, 0}, {2, 1}}));
  const auto c12 = build_group("C12");
  EXPECT_EQ(directed_power_graph(c12).out_degree(el(c12, "1")), 11U);
}

TEST(PowerGraph, Examples) {
  EXPECT_EQ(power_graph(build_group("C6")).edge_count(), 13U);
  EXPECT_EQ(power_graph(build_group("S3")).edge_count(), 6U);
  EXPECT_TRUE(power_graph(build_group("C7")).same_edges(test::complete_graph(7)));
  EXPECT_EQ(test::error_code([] { power_graph(build_group("S7"), 1000); }), ErrorCode::kGraphCapExceeded);
}

TEST(PowerGraph, MatchesPoweringOracle) {
  for (const auto& spec : test::small_groups()) {
    const auto g = build_group(spec);
    const auto d = directed_power_graph(g);
    EXPECT_TRUE(d.same_arcs(oracle::directed_power_graph(g))) << spec;
    EXPECT_TRUE(power_graph(g).same_edges(d.underlying())) << spec;
    EXPECT_TRUE(power_graph(g).same_edges(oracle::power_graph(g))) << spec;
  }
}

TEST(EnhancedPowerGraph, Examples) {
  EXPECT_TRUE(enhanced_power_graph(build_group("C10")).same_edges(test::complete_graph(10)));
  const auto s5 = build_group("S5");
  const auto e = enhanced_power_graph(s5);
  const auto p = power_graph(s5);
  const auto a = el(s5, "(1 3 2)"), b = el(s5, "(4 5)");
  EXPECT_TRUE(e.adjacent(a, b));
  EXPECT_FALSE(p.adjacent(a, b));
  const auto d4 = build_group("D4");
  EXPECT_TRUE(enhanced_power_graph(d4).same_edges(power_graph(d4)));
}

TEST(EnhancedPowerGraph, ContainsPowerGraphAndMatchesPairOracle) {
  for (const auto& spec : test::small_groups()) {
    const auto g = build_group(spec);
    const auto e = enhanced_power_graph(g);
    const auto p = power_graph(g);
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = x + 1; y < g.order(); ++y) {
        if (p.adjacent(x, y)) ASSERT_TRUE(e.adjacent(x, y)) << spec;
        ASSERT_EQ(e.adjacent(x, y), oracle::common_cyclic_overgroup(g, x, y)) << spec;
      }
    }
  }
}

TEST(MaximalCyclic, A5Census) {
  // 6 subgroups of order 5, 10 of order 3, 15 of order 2.
  const auto a5 = build_group("A5");
  std::map<std::uint64_t, int> orders;
  for (const Element z : maximal_cyclic_generators(a5)) ++orders[a5.element_order(z)];
  EXPECT_EQ(orders, (std::map<std::uint64_t, int>{{2, 15}, {3, 10}, {5, 6}}));
}

TEST(ApproxClasses, Examples) {
  const auto c6 = build_group("C6");
  EXPECT_EQ(class_labels(c6, approx_classes(c6)),
            (std::vector<std::vector<std::string>>{{"0"}, {"1", "5"}, {"2", "4"}, {"3"}}));
  const auto s3 = build_group("S3");
  const auto a = approx_classes(s3);
  EXPECT_EQ(a.size(), 5U);
  EXPECT_EQ(a.class_containing(el(s3, "(1 2 3)")).size(), 2U);
  for (const auto* t : {"(1 2)", "(1 3)", "(2 3)"}) EXPECT_EQ(a.class_containing(el(s3, t)).size(), 1U);
}

TEST(EquivClasses, Examples) {
  EXPECT_EQ(equiv_classes(power_graph(build_group("S3"))).size(), 5U);
  const auto d4 = build_group("D4");
  const auto e = equiv_classes(power_graph(d4));
  EXPECT_EQ(e.size(), 6U);
  EXPECT_EQ(class_labels(d4, Partition({e.class_containing(el(d4, "r"))}, d4.order())).front(),
            (std::vector<std::string>{"r", "r^2", "r^3"}));
  EXPECT_EQ(equiv_classes(test::complete_graph(5)).size(), 1U);
}

TEST(ClassifyClass, Examples) {
  const auto d4 = build_group("D4");
  const auto pg4 = power_graph(d4);
  const auto e4 = equiv_classes(pg4);
  EXPECT_EQ(classify_class(pg4, e4, e4.class_of[el(d4, "r")]), ClassType::complex_class(2, 2, 1));

  const auto s3 = build_group("S3");
  const auto pg3 = power_graph(s3);
  const auto e3 = equiv_classes(pg3);
  EXPECT_EQ(classify_class(pg3, e3, e3.class_of[el(s3, "(1 2 3)")]), ClassType::simple());

  const auto s5 = build_group("S5");
  const auto pg5 = power_graph(s5);
  const auto e5 = equiv_classes(pg5);
  const auto& c = e5.class_containing(el(s5, "(1 2 3)(4 5)"));
  EXPECT_EQ(c.size(), 2U);
  EXPECT_EQ(classify_class(pg5, e5, e5.class_of[c.front()]), ClassType::simple());

  const auto q8 = build_group("Q8");
  const auto pgq = power_graph(q8);
  EXPECT_EQ(test::error_code([&] { classify_class(pgq, equiv_classes(pgq), 0); }), ErrorCode::kCenterNotTrivial);
}

TEST(Center, Examples) {
  const auto s3 = center_of_finite_component(power_graph(build_group("S3")));
  EXPECT_TRUE(s3.trivial);
  EXPECT_EQ(s3.center, std::vector<Vertex>{0});
  const auto q8g = build_group("Q8");
  const auto q8 = center_of_finite_component(power_graph(q8g));
  EXPECT_FALSE(q8.trivial);
  EXPECT_EQ(q8.center, (std::vector<Vertex>{el(q8g, "1"), el(q8g, "-1")}));
  EXPECT_EQ(center_of_finite_component(power_graph(build_group("C9"))).center.size(), 9U);
}

TEST(ClassMachinery, CorpusInvariants) {
  for (const auto& spec : tools::default_corpus()) {
    const auto g = build_group(spec);
    const auto pg = power_graph(g);
    const auto d = class_decomposition(g, pg);
    ASSERT_TRUE(d.approx.refines(d.equiv)) << spec;
    for (const auto& c : d.approx.classes) ASSERT_EQ(c.size(), euler_phi(g.element_order(c.front()))) << spec;
    const auto center = center_of_finite_component(pg);
    ASSERT_EQ(center.center.front(), FiniteGroup::identity()) << spec;
    if (!center.trivial) {
      ASSERT_TRUE(d.types.empty()) << spec;
      continue;
    }
    ASSERT_EQ(d.types.size(), d.equiv.size());
    for (std::size_t i = 0; i < d.types.size(); ++i) {
      const auto& t = d.types[i];
      if (!t.complex) continue;
      ASSERT_GT(t.r, t.s) << spec;
      ASSERT_GT(t.s, 0U) << spec;
      ASSERT_EQ(d.equiv.classes[i].size(), int_pow(t.prime, t.r) - int_pow(t.prime, t.s - 1)) << spec;
    }
    ASSERT_EQ(oracle::check_class_types(g, d.equiv, d.types), std::nullopt) << spec;
  }
}

}  // namespace
}  // namespace ggx
