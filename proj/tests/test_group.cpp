#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gda/group.hpp"

using namespace gda;

namespace {

// Independent automorphism count: all image tuples whose map is a bijective homomorphism.
int64_t brute_aut_count(const FiniteAbelianGroup& g) {
  const int r = g.rank();
  const int64_t size = g.cardinality();
  int64_t count = 0;
  std::vector<int64_t> pick(static_cast<size_t>(r), 0);
  for (;;) {
    GroupMap m;
    for (int i = 0; i < r; ++i) m.images.push_back(g.element_at(pick[static_cast<size_t>(i)]));
    bool hom = true;
    for (int i = 0; i < r && hom; ++i) hom = g.is_identity(g.scale(g.orders()[static_cast<size_t>(i)], m.images[static_cast<size_t>(i)]));
    if (hom) {
      std::set<int64_t> seen;
      for (int64_t x = 0; x < size; ++x) seen.insert(g.index_of(m.apply(g, g.element_at(x))));
      if (static_cast<int64_t>(seen.size()) == size) ++count;
    }
    int i = 0;
    while (i < r && ++pick[static_cast<size_t>(i)] == size) pick[static_cast<size_t>(i++)] = 0;
    if (i == r) break;
  }
  return count;
}

FiniteAbelianGroup random_group(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank(0, 3), ord(1, 12);
  std::vector<int> o;
  for (int i = rank(rng); i > 0; --i) o.push_back(ord(rng));
  return FiniteAbelianGroup(o);
}

}  // namespace

TEST(Group, MakeGroup) {
  EXPECT_EQ(make_group({2, 2}).cardinality(), 4);
  EXPECT_EQ(make_group({}).cardinality(), 1);
  EXPECT_EQ(make_group({4, 2}).invariant_factors(), (std::vector<int>{2, 4}));
  EXPECT_THROW(make_group({0}), InvalidGroup);
  EXPECT_THROW(make_group({3, -1}), InvalidGroup);
}

TEST(Group, ParseLiteral) {
  EXPECT_EQ(parse_group("Z4xZ2").orders(), (std::vector<int>{4, 2}));
  EXPECT_EQ(parse_group("Z4xZ2").to_string(), "Z4xZ2");
  EXPECT_THROW(parse_group("Z4x"), InvalidGroup);
}

TEST(Group, ElementOrder) {
  EXPECT_EQ(element_order(make_group({4}), {2}), 2);
  EXPECT_EQ(element_order(make_group({2, 4}), {1, 1}), 4);
  EXPECT_EQ(element_order(make_group({3}), {0}), 1);
}

TEST(Group, PrimaryDecomposition) {
  using PF = PrimaryFactor;
  EXPECT_EQ(primary_decomposition(make_group({12})), (std::vector<PF>{{2, 2, 1}, {3, 1, 1}}));
  EXPECT_EQ(primary_decomposition(make_group({2, 2})), (std::vector<PF>{{2, 1, 2}}));
  EXPECT_EQ(primary_decomposition(make_group({8, 6})), (std::vector<PF>{{2, 1, 1}, {2, 3, 1}, {3, 1, 1}}));
  EXPECT_EQ(primary_orders(make_group({8, 6})), (std::vector<int>{2, 8, 3}));
}

TEST(Group, AutomorphismCounts) {
  auto count = [](std::vector<int> o) {
    return enumerate_automorphisms(make_group(o), 100000, [](const GroupAutomorphism&) { return true; });
  };
  EXPECT_EQ(count({2, 2}), 6);
  EXPECT_EQ(count({2}), 1);
  EXPECT_EQ(count({4}), 2);
  EXPECT_EQ(count({2, 2, 2}), 168);
  EXPECT_EQ(count({2, 2, 2, 2}), 20160);
}

TEST(Group, AutomorphismBudget) {
  EXPECT_THROW(automorphisms(make_group({2, 2, 2}), 10), BudgetExceeded);
}

TEST(Group, AutomorphismsMatchBruteForce) {
  for (auto o : std::vector<std::vector<int>>{{6}, {2, 4}, {4, 4}, {3, 3}, {2, 6}, {8}, {2, 2, 4}}) {
    FiniteAbelianGroup g(o);
    auto auts = automorphisms(g, 1000000);
    EXPECT_EQ(static_cast<int64_t>(auts.size()), brute_aut_count(g)) << g.to_string();
    std::set<std::vector<GroupElement>> distinct;
    for (const auto& a : auts) {
      distinct.insert(a.images);
      EXPECT_TRUE(is_isomorphism(g, g, GroupMap{a.images}));
    }
    EXPECT_EQ(distinct.size(), auts.size());
  }
}

TEST(Group, SubgroupGenerated) {
  EXPECT_EQ(subgroup_generated(make_group({4}), {{2}}).cardinality, 2);
  EXPECT_EQ(subgroup_generated(make_group({2, 2}), {}).cardinality, 1);
  auto s = subgroup_generated(make_group({4, 8}), {{2, 0}, {0, 2}});
  EXPECT_EQ(s.cardinality, 8);
  EXPECT_EQ(s.invariant_factors, (std::vector<int>{2, 4}));
  EXPECT_TRUE(s.contains(make_group({4, 8}), {2, 6}));
  EXPECT_FALSE(s.contains(make_group({4, 8}), {1, 0}));
}

TEST(Group, Isomorphic) {
  EXPECT_TRUE(isomorphic(make_group({2, 4}), make_group({4, 2})).has_value());
  EXPECT_FALSE(isomorphic(make_group({4}), make_group({2, 2})).has_value());
  auto w = isomorphic(make_group({8, 2}), make_group({2, 8}));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_isomorphism(make_group({8, 2}), make_group({2, 8}), *w));
  EXPECT_TRUE(isomorphic(make_group({6}), make_group({2, 3})).has_value());
}

TEST(GroupProperty, LagrangeAndReassembly) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    FiniteAbelianGroup g = random_group(rng);
    for (int64_t i = 0; i < g.cardinality(); ++i) {
      EXPECT_EQ(g.cardinality() % element_order(g, g.element_at(i)), 0);
      EXPECT_EQ(g.index_of(g.element_at(i)), i);
    }
    FiniteAbelianGroup re(primary_orders(g));
    EXPECT_TRUE(isomorphic(g, re).has_value()) << g.to_string();
    EXPECT_EQ(canonical_group(g), canonical_group(re));
    auto basis = primary_basis(g);
    EXPECT_EQ(subgroup_generated(g, basis).cardinality, g.cardinality());
  }
}

TEST(GroupProperty, InvariantFactorsDivide) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    FiniteAbelianGroup g = random_group(rng);
    auto f = g.invariant_factors();
    int64_t prod = 1;
    for (size_t i = 0; i < f.size(); ++i) {
      prod *= f[i];
      if (i + 1 < f.size()) EXPECT_EQ(f[i + 1] % f[i], 0);
    }
    EXPECT_EQ(prod, g.cardinality());
  }
}
