#include <map>
#include <numeric>
#include <set>

#include "ggx/group_spec.hpp"
#include "ggx/groups.hpp"
#include "ggx/number_theory.hpp"
#include "ggx/tools/oracles.hpp"
#include "support.hpp"

namespace ggx {
namespace {

using test::el;

TEST(GroupSpec, ParsesTerms) {
  const auto c6 = parse_group_spec("C6");
  EXPECT_EQ(c6.kind, GroupSpec::Kind::kCyclic);
  EXPECT_EQ(c6.n, 6U);
  const auto product = parse_group_spec("C30xC30");
  ASSERT_EQ(product.kind, GroupSpec::Kind::kDirectProduct);
  ASSERT_EQ(product.factors.size(), 2U);
  EXPECT_EQ(product.factors[0], product.factors[1]);
  EXPECT_EQ(product.factors[0].n, 30U);
  EXPECT_EQ(render_group_spec(product), "C30xC30");
}

TEST(GroupSpec, RejectsBadInput) {
  EXPECT_EQ(test::error_code([] { parse_group_spec("C0"); }), ErrorCode::kInvalidOrder);
  EXPECT_EQ(test::error_code([] { parse_group_spec("Z99"); }), ErrorCode::kSyntax);
  EXPECT_EQ(test::error_code([] { parse_group_spec("C6x"); }), ErrorCode::kSyntax);
}

TEST(BuildGroup, Orders) {
  EXPECT_EQ(build_group("S7").order(), 5040U);
  EXPECT_EQ(build_group("A5").order(), 60U);
  EXPECT_EQ(build_group("D4").order(), 8U);
  EXPECT_EQ(build_group("C30xC30").order(), 900U);
  EXPECT_EQ(test::error_code([] { build_group("S9"); }), ErrorCode::kOrderCapExceeded);
}

TEST(BuildGroup, GroupLawsHold) {
  for (const auto& spec : test::small_groups()) {
    EXPECT_EQ(check_group_laws(build_group(spec)), std::nullopt) << spec;
  }
}

TEST(BuildGroup, Quaternion8OrderCensusMatchesPowering) {
  const auto q8 = build_group("Q8");
  std::map<std::uint64_t, std::uint64_t> census;
  for (Element x = 0; x < q8.order(); ++x) ++census[oracle::powers_by_multiplication(q8, x).size()];
  EXPECT_EQ(census, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {4, 6}}));
  const auto computed = order_census(q8);
  const std::map<std::uint64_t, std::uint64_t> from_census(computed.begin(), computed.end());
  EXPECT_EQ(from_census, census);
}

TEST(BuildGroup, CayleyFile) {
  const auto path = test::temp_file("c3.json",
                                    R"({"version":1,"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]],"labels":["e","a","b"]})");
  const auto g = build_group("cayley:" + path.string());
  EXPECT_EQ(g.order(), 3U);
  EXPECT_EQ(g.element_order(el(g, "a")), 3U);
  const auto bad = test::temp_file("bad.json", R"({"version":1,"order":2,"table":[[1,0],[0,1]]})");
  EXPECT_EQ(test::error_code([&] { build_group("cayley:" + bad.string()); }), ErrorCode::kBadCayleyFile);
}

TEST(BuildGroup, PermutationFile) {
  // S3 from (1 2) and (1 2 3), 0-based images.
  const auto path = test::temp_file("s3.json", R"({"version":1,"degree":3,"generators":[[1,0,2],[1,2,0]]})");
  const auto g = build_group("perm:" + path.string());
  EXPECT_EQ(g.order(), 6U);
  const auto broken = test::temp_file("broken.json", R"({"version":1,"degree":3,"generators":[[1,1,2]]})");
  EXPECT_EQ(test::error_code([&] { build_group("perm:" + broken.string()); }), ErrorCode::kBadPermutationFile);
}

TEST(ElementOrder, Examples) {
  const auto s8 = build_group("S8");
  EXPECT_EQ(s8.element_order(FiniteGroup::identity()), 1U);
  const auto x = el(s8, "(1 2 3 4 5)(6 7 8)");
  EXPECT_EQ(s8.element_order(x), oracle::powers_by_multiplication(s8, x).size());
  EXPECT_EQ(s8.element_order(x), 15U);

  // The orders listed for S7: 2, 3, 4, 5, 6, 7, 10 and 12.
  const auto s7 = build_group("S7");
  std::set<std::uint64_t> orders;
  for (Element y = 0; y < s7.order(); ++y) orders.insert(s7.element_order(y));
  EXPECT_EQ(orders, (std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 10, 12}));
}

TEST(ElementOrder, DividesGroupOrderAndMatchesCyclicSubgroup) {
  for (const auto& spec : test::small_groups()) {
    const auto g = build_group(spec);
    for (Element x = 0; x < g.order(); ++x) {
      ASSERT_EQ(g.order() % g.element_order(x), 0U) << spec;
      ASSERT_EQ(cyclic_subgroup(g, x).size(), g.element_order(x)) << spec;
    }
  }
}

TEST(CyclicSubgroup, Examples) {
  const auto s3 = build_group("S3");
  EXPECT_EQ(cyclic_subgroup(s3, FiniteGroup::identity()), std::vector<Element>{FiniteGroup::identity()});
  EXPECT_EQ(cyclic_subgroup(s3, el(s3, "(1 2 3)")).size(), 3U);
  const auto a8 = build_group("A8");
  const auto x = el(a8, "(1 2 3 4 5)(6 7 8)");
  const auto sub = cyclic_subgroup(a8, x);
  auto expected = oracle::powers_by_multiplication(a8, x);
  EXPECT_EQ(std::set<Element>(sub.begin(), sub.end()), std::set<Element>(expected.begin(), expected.end()));
  EXPECT_EQ(sub.size(), 15U);
}

TEST(IsCyclicPair, Examples) {
  const auto s8 = build_group("S8");
  EXPECT_TRUE(is_cyclic_pair(s8, el(s8, "(1 2 3 4 5)"), el(s8, "(6 7 8)")));
  EXPECT_FALSE(is_cyclic_pair(s8, el(s8, "(1 2)"), el(s8, "(6 7)")));
  for (Element x = 0; x < 200; ++x) EXPECT_TRUE(is_cyclic_pair(s8, x, s8.power(x, 2)));
}

TEST(IsCyclicPair, AgreesWithOvergroupScan) {
  for (const auto& spec : test::small_groups()) {
    const auto g = build_group(spec);
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = x; y < g.order(); ++y) {
        ASSERT_EQ(is_cyclic_pair(g, x, y), oracle::common_cyclic_overgroup(g, x, y))
            << spec << ' ' << g.label(x) << ' ' << g.label(y);
      }
    }
  }
}

TEST(PElements, Examples) {
  const auto s3 = build_group("S3");
  EXPECT_EQ(p_elements(s3, 2).size(), 4U);
  const auto a5 = build_group("A5");
  std::size_t five_elements = 0;
  for (Element x = 0; x < a5.order(); ++x) {
    const auto n = oracle::powers_by_multiplication(a5, x).size();
    if (n == 1 || n == 5) ++five_elements;
  }
  EXPECT_EQ(p_elements(a5, 5).size(), five_elements);
  EXPECT_EQ(five_elements, 25U);
  EXPECT_EQ(p_elements(build_group("C10"), 3), std::vector<Element>{FiniteGroup::identity()});
}

TEST(SylowReport, Examples) {
  const auto a5 = sylow_report(build_group("A5"));
  ASSERT_EQ(a5.records.size(), 3U);
  EXPECT_FALSE(a5.find(2)->unique);
  EXPECT_FALSE(a5.find(2)->cyclic);
  EXPECT_FALSE(a5.find(3)->unique);
  EXPECT_TRUE(a5.find(3)->cyclic);
  EXPECT_FALSE(a5.find(5)->unique);
  EXPECT_TRUE(a5.find(5)->cyclic);

  for (const auto& r : sylow_report(build_group("C30xC30")).records) {
    EXPECT_TRUE(r.unique) << r.prime;
    EXPECT_FALSE(r.cyclic) << r.prime;
  }

  const auto s8 = sylow_report(build_group("S8"));
  EXPECT_FALSE(s8.find(3)->unique);
  EXPECT_FALSE(s8.find(3)->cyclic);
  EXPECT_EQ(s8.find(3)->exponent, 2U);
  EXPECT_EQ(s8.find(2)->exponent, 7U);
}

TEST(SylowReport, UniqueIffPElementsClosed) {
  for (const auto& spec : test::small_groups()) {
    const auto g = build_group(spec);
    for (const auto& r : sylow_report(g).records) {
      const auto members = p_elements(g, r.prime);
      const std::set<Element> set(members.begin(), members.end());
      bool closed = true;
      for (const Element a : members) {
        for (const Element b : members) closed = closed && set.count(g.multiply(a, b)) > 0;
      }
      EXPECT_EQ(r.unique, closed) << spec << " p=" << r.prime;
      EXPECT_EQ(r.unique, members.size() == int_pow(r.prime, r.exponent)) << spec << " p=" << r.prime;
    }
  }
}

TEST(PrimePowerDecomposition, Examples) {
  const auto s5 = build_group("S5");
  const auto parts = prime_power_decomposition(s5, el(s5, "(1 2 3)(4 5)"));
  EXPECT_EQ(parts, (std::vector<Element>{el(s5, "(4 5)"), el(s5, "(1 2 3)"), FiniteGroup::identity()}));
  EXPECT_EQ(prime_power_decomposition(s5, FiniteGroup::identity()), std::vector<Element>(3, FiniteGroup::identity()));
  const auto five = el(s5, "(1 2 3 4 5)");
  EXPECT_EQ(prime_power_decomposition(s5, five),
            (std::vector<Element>{FiniteGroup::identity(), FiniteGroup::identity(), five}));
}

TEST(PrimePowerDecomposition, Invariants) {
  for (const auto& spec : test::small_groups()) {
    const auto g = build_group(spec);
    for (Element x = 0; x < g.order(); ++x) {
      const auto parts = prime_power_decomposition(g, x);
      ASSERT_EQ(parts.size(), g.primes().size());
      Element product = FiniteGroup::identity();
      std::uint64_t orders = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        product = g.multiply(product, parts[i]);
        const auto o = g.element_order(parts[i]);
        ASSERT_TRUE(o == 1 || as_prime_power(o)->prime == g.primes()[i]) << spec;
        orders *= o;
        for (std::size_t j = 0; j < parts.size(); ++j) {
          ASSERT_EQ(g.multiply(parts[i], parts[j]), g.multiply(parts[j], parts[i])) << spec;
        }
      }
      ASSERT_EQ(product, x) << spec << ' ' << g.label(x);
      ASSERT_EQ(orders, g.element_order(x)) << spec;
    }
  }
}

TEST(NumberTheory, Basics) {
  EXPECT_EQ(prime_divisors(900), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(euler_phi(12), 4U);
  EXPECT_EQ(valuation(40320, 2), 7U);
  EXPECT_EQ(as_prime_power(6), std::nullopt);
  EXPECT_EQ(as_prime_power(27)->exponent, 3U);
  EXPECT_EQ(mod_inverse(3, 7), 5U);
}

}  // namespace
}  // namespace ggx
