#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "gda/catalog.hpp"
#include "gda/invariants.hpp"
#include "oracle_support.hpp"

using namespace gda;

namespace {

Presentation pres(const FactorList& fs) { return presentation_of(fs); }

// Degrees whose +-monomial satisfies x^(2^k) = sign I, by word arithmetic.
int64_t brute_support(const Presentation& p, int k, int sign) {
  oracle::Rel r = oracle::relations_of(p);
  const oracle::Elem want{sign < 0 ? p.root_order / 2 : 0, std::vector<int>(p.gens.size(), 0)};
  int64_t count = 0;
  for (const auto& x : oracle::all_elements(r, {0})) count += oracle::pow(r, x, 1 << k) == want ? 1 : 0;
  return count;
}

std::pair<int64_t, int64_t> brute_pairs(const Presentation& p, int k, int l) {
  oracle::Rel r = oracle::relations_of(p);
  const oracle::Elem id = oracle::one(r);
  std::vector<oracle::Elem> xs, ys;
  for (const auto& x : oracle::all_elements(r, {0})) {
    if (oracle::pow(r, x, 1 << k) == id) xs.push_back(x);
    if (oracle::pow(r, x, 1 << l) == id) ys.push_back(x);
  }
  std::pair<int64_t, int64_t> out{0, 0};
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      int c = oracle::comm_exp(r, x, y);
      if (c == 0) ++out.first;
      if (c == p.root_order / 2) ++out.second;
    }
  }
  return out;
}

FactorList type1(std::mt19937& rng) {
  FactorList fs;
  for (int i = gen::pick(rng, 1, 3); i > 0; --i) {
    if (gen::pick(rng, 0, 2) == 0) {
      fs.push_back(factor_c(1 << gen::pick(rng, 1, 3), 1));
    } else {
      fs.push_back(factor_d(1 << gen::pick(rng, 1, 3), 1 << gen::pick(rng, 1, 3), 1, 1));
    }
  }
  return fs;
}

}  // namespace

TEST(Invariants, Characteristic) {
  Characteristic a = characteristic({factor_d(4, 8, -1, 1), factor_c(2, -1)});
  EXPECT_EQ(a.d, (std::vector<DTuple>{{2, 3, -1, 1}}));
  EXPECT_EQ(a.c, (std::vector<CTuple>{{1, -1}}));
  Characteristic b = characteristic({factor_rg({3})});
  EXPECT_TRUE(b.d.empty() && b.c.empty());
  EXPECT_EQ(b.odd_part, (std::vector<int>{3}));
  Characteristic h = characteristic({factor_d(2, 2, -1, -1), factor_d(2, 2, 1, 1)});
  EXPECT_EQ(h.d, (std::vector<DTuple>{{1, 1, -1, -1}, {1, 1, 1, 1}}));
}

TEST(Invariants, Truncated) {
  TruncatedCharacteristic t = truncated(characteristic({factor_d(4, 8, -1, 1), factor_c(2, -1)}));
  EXPECT_EQ(t.d, (std::vector<std::pair<int, int>>{{2, 3}}));
  EXPECT_EQ(t.c, (std::vector<int>{1}));
  EXPECT_TRUE(truncated(characteristic({})).d.empty());
  TruncatedCharacteristic h = truncated(characteristic({factor_d(2, 2, -1, -1), factor_d(2, 2, 1, 1)}));
  EXPECT_EQ(h.d, (std::vector<std::pair<int, int>>{{1, 1}, {1, 1}}));
}

TEST(Invariants, Parity) {
  EXPECT_EQ(d_parity({{1, 1, 1, 1}, {1, 1, -1, 1}}), Parity::Even);
  EXPECT_EQ(d_parity({{1, 2, -1, 1}}), Parity::Odd);
  EXPECT_EQ(d_parity({{1, 2, -1, -1}}), Parity::Other);
}

TEST(Invariants, CliffordCounts) {
  auto c1 = clifford_counts(1, true);
  EXPECT_EQ(std::make_pair(c1.d_plus, c1.d_minus), (std::pair<int64_t, int64_t>{3, 1}));
  auto c0 = clifford_counts(0, true);
  EXPECT_EQ(std::make_pair(c0.d_plus, c0.d_minus), (std::pair<int64_t, int64_t>{1, 0}));
  auto c3 = clifford_counts(3, true);
  EXPECT_EQ(std::make_pair(c3.d_plus, c3.d_minus), (std::pair<int64_t, int64_t>{36, 28}));
  for (int m = 0; m <= 6; ++m) {
    auto c = clifford_counts(m, true);
    EXPECT_TRUE(c.brute_checked);
    EXPECT_GT(c.d_plus, c.d_minus);
    if (m >= 1) EXPECT_EQ((c.d_plus % 3) + (c.d_minus % 3), 1);
  }
}

TEST(Invariants, SolutionSupport) {
  EXPECT_EQ(solution_support_count(named("M2_4"), 1, 1), 3);
  EXPECT_EQ(solution_support_count(named("H4"), 1, -1), 3);
  EXPECT_GT(solution_support_count(basic_c(4, -1), 2, -1), 0);
}

TEST(Invariants, CentralSolution) {
  EXPECT_TRUE(central_solution_exists(pres({factor_c(4, -1), factor_d(2, 2, 1, 1)}), 2, -1));
  EXPECT_FALSE(central_solution_exists(pres({factor_d(4, 4, -1, 1)}), 2, -1));
  EXPECT_TRUE(central_solution_exists(named("H4"), 3, 1));
}

TEST(Invariants, PairSolutionCounts) {
  EXPECT_EQ(pair_solution_counts(pres({factor_d(4, 8, -1, 1), factor_d(4, 16, 1, 1)}), 2, 3).second, 0);
  EXPECT_GT(pair_solution_counts(pres({factor_d(4, 8, 1, 1), factor_d(4, 16, -1, 1)}), 2, 3).second, 0);
  Presentation r8 = group_algebra(make_group({8}));
  for (int k = 1; k <= 3; ++k) {
    for (int l = k; l <= 3; ++l) EXPECT_EQ(pair_solution_counts(r8, k, l).second, 0);
  }
}

TEST(Invariants, MinimalNoncommutingDegree) {
  EXPECT_EQ(minimal_noncommuting_degree(pres({factor_e(4, 1), factor_d(2, 2, 1, 1)})), 4);
  EXPECT_EQ(minimal_noncommuting_degree(basic_e(2, -1)), 2);
  EXPECT_EQ(minimal_noncommuting_degree(pres({factor_e(8, -1), factor_rg({2})})), 8);
  EXPECT_THROW(minimal_noncommuting_degree(named("H4")), UnsupportedKind);
}

TEST(Invariants, UngradedDecomposition) {
  EXPECT_EQ(ungraded_decomposition_commutative(basic_c(4, 1)), (std::pair<int64_t, int64_t>{1, 2}));
  EXPECT_EQ(ungraded_decomposition_commutative(basic_c(2, -1)), (std::pair<int64_t, int64_t>{1, 0}));
  EXPECT_EQ(ungraded_decomposition_commutative(pres({factor_c(2, 1), factor_c(2, 1)})),
            (std::pair<int64_t, int64_t>{0, 4}));
  EXPECT_THROW(ungraded_decomposition_commutative(named("H4")), UnsupportedKind);
}

TEST(InvariantsProperty, OneDimCountsMatchWordReference) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    Presentation p = pres(gen::factors(rng, 3, 64, false));
    for (int k = 1; k <= 3; ++k) {
      for (int s : {1, -1}) {
        ASSERT_EQ(solution_support_count(p, k, s), brute_support(p, k, s)) << p.group.to_string();
      }
    }
    ASSERT_GE(solution_support_count(p, 1, 1), 1);
  }
}

TEST(InvariantsProperty, PairCountsMatchWordReference) {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    Presentation p = pres(gen::factors(rng, 3, 32, false));
    for (int k = 1; k <= 2; ++k) {
      for (int l = k; l <= 3; ++l) ASSERT_EQ(pair_solution_counts(p, k, l), brute_pairs(p, k, l));
    }
  }
}

TEST(InvariantsProperty, TypeOneAlgebras) {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    Presentation p = pres(type1(rng));
    if (p.dim() > 256) {
      --trial;
      continue;
    }
    for (int k = 2; k <= 3; ++k) EXPECT_EQ(solution_support_count(p, k, -1), 0);
    for (int k = 2; k <= 3; ++k) {
      for (int l = k; l <= 3; ++l) {
        auto [a0, a1] = pair_solution_counts(p, k, l);
        EXPECT_GT(a0, a1);
      }
    }
  }
}

TEST(InvariantsProperty, DecompositionDimension) {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    FactorList fs;
    for (int i = gen::pick(rng, 1, 3); i > 0; --i) fs.push_back(factor_c(gen::pick(rng, 2, 8), gen::sign(rng)));
    Presentation p = pres(fs);
    auto [c, r] = ungraded_decomposition_commutative(p);
    EXPECT_EQ(2 * c + r, p.dim());
  }
}
