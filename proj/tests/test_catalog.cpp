#include <gtest/gtest.h>

#include <array>

#include "gda/catalog.hpp"
#include "gda/equivalence.hpp"
#include "gda/factors.hpp"

using namespace gda;

TEST(Catalog, BasicC) {
  Presentation c2 = basic_c(2, -1);
  EXPECT_EQ(c2.gens[0].sign, -1);
  EXPECT_EQ(c2.dim(), 2);
  std::string notice;
  Presentation c3 = basic_c(3, -1, &notice);
  EXPECT_EQ(c3.gens[0].sign, 1);
  EXPECT_FALSE(notice.empty());
  Presentation c4 = basic_c(4, 1);
  EXPECT_EQ(c4.group.orders(), (std::vector<int>{4}));
  EXPECT_THROW(basic_c(1, 1), InvalidParameter);
}

TEST(Catalog, BasicD) {
  Presentation h4 = basic_d(2, 2, -1, -1);
  EXPECT_EQ(h4.gens[0].sign, -1);
  EXPECT_EQ(h4.gens[1].sign, -1);
  Presentation s = basic_d(8, 2, 1, -1);
  EXPECT_EQ(s.group.orders(), (std::vector<int>{2, 8}));
  EXPECT_EQ(s.gens[0].sign, -1);
  EXPECT_EQ(s.gens[1].sign, 1);
  EXPECT_THROW(basic_d(3, 2, 1, 1), InvalidParameter);
}

TEST(Catalog, BasicE) {
  Presentation e = basic_e(4, 1);
  EXPECT_EQ(e.dim(), 8);
  EXPECT_EQ(e.kind, IdentityKind::NoncentralJ);
  EXPECT_TRUE(e.gens[0].j_anti);
  EXPECT_THROW(basic_e(6, 1), InvalidParameter);
}

TEST(Catalog, OtherConstructors) {
  EXPECT_EQ(group_algebra(make_group({3})).dim(), 3);
  Presentation cg = complex_group_algebra(make_group({2}));
  EXPECT_EQ(cg.dim(), 4);
  EXPECT_EQ(cg.kind, IdentityKind::CentralJ);
  EXPECT_EQ(quaternion().dim(), 4);
  EXPECT_EQ(quaternion().group.cardinality(), 1);
}

TEST(Catalog, Pauli) {
  Presentation p = pauli(make_group({2, 2}), Bicharacter{2, {{0, 1}, {1, 0}}});
  EXPECT_EQ(p.kind, IdentityKind::CentralJ);
  EXPECT_EQ(p.dim(), 8);
  for (const auto& g : p.gens) EXPECT_EQ(g.sign, 1);
  Presentation q = pauli(make_group({4, 4}), Bicharacter{4, {{0, 1}, {3, 0}}});
  EXPECT_EQ(q.dim(), 32);
  Presentation triv = pauli(make_group({2, 4}), Bicharacter{4, {{0, 0}, {0, 0}}});
  Presentation cg = complex_group_algebra(make_group({2, 4}));
  EXPECT_TRUE(oracle_search(triv, cg, 1000000).has_value());
  EXPECT_THROW(pauli(make_group({2, 2}), Bicharacter{4, {{0, 1}, {3, 0}}}), InvalidBicharacter);
}

TEST(Catalog, NamedDimensions) {
  const std::vector<std::pair<std::string, int64_t>> dims = {{"C2", 2},   {"H2", 4},     {"H4", 4},
                                                             {"M2_2", 4}, {"M2_4", 4},   {"M2_8", 8},
                                                             {"M2C_Z4", 8}, {"M4_4", 16}, {"H", 4}};
  ASSERT_EQ(named_catalog().size(), dims.size());
  for (const auto& [name, d] : dims) {
    Presentation p = named(name);
    EXPECT_EQ(p.dim(), d) << name;
    EXPECT_NO_THROW(p.validate()) << name;
    EXPECT_TRUE(check_division(p)) << name;
  }
  EXPECT_EQ(named("H4").gens.size(), basic_d(2, 2, -1, -1).gens.size());
  EXPECT_THROW(named("M3"), InvalidParameter);
}

namespace {

// 4x4 integer matrices built as Kronecker products of the 2x2 matrices A, B, C.
using M2 = std::array<std::array<int, 2>, 2>;
using M4 = std::array<std::array<int, 4>, 4>;

const M2 kI = {{{1, 0}, {0, 1}}};
const M2 kA = {{{1, 0}, {0, -1}}};
const M2 kB = {{{0, 1}, {1, 0}}};
const M2 kC = {{{0, 1}, {-1, 0}}};

M4 kron(const M2& x, const M2& y) {
  M4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = x[i][j] * y[k][l];
  return out;
}

M4 mul(const M4& x, const M4& y) {
  M4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

M4 neg(M4 x) {
  for (auto& r : x)
    for (auto& v : r) v = -v;
  return x;
}

// Rank of a list of 4x4 matrices as vectors in Q^16 (fraction-free elimination).
int rank16(std::vector<M4> ms) {
  std::vector<std::array<long long, 16>> rows;
  for (const auto& m : ms) {
    std::array<long long, 16> r{};
    for (int i = 0; i < 16; ++i) r[i] = m[i / 4][i % 4];
    rows.push_back(r);
  }
  int rank = 0;
  for (int col = 0; col < 16 && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) piv = r;
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      long long a = rows[rank][col], b = rows[r][col];
      for (int c = 0; c < 16; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

// The abstract M4_4 encoding against the explicit matrix grading of M_4(R).
TEST(Catalog, M44MatrixCrossCheck) {
  const M4 e0 = kron(kI, kI), qi = kron(kC, kI), qj = kron(kA, kC), qk = kron(kB, kC);
  const M4 x = kron(kI, kC), y = kron(kC, kA);
  // R_e is a quaternion algebra: i^2 = j^2 = -1, ij = +-k.
  EXPECT_EQ(mul(qi, qi), neg(e0));
  EXPECT_EQ(mul(qj, qj), neg(e0));
  EXPECT_TRUE(mul(qi, qj) == qk || mul(qi, qj) == neg(qk));
  EXPECT_EQ(mul(qi, qj), neg(mul(qj, qi)));
  // The degree-alpha and degree-beta generators commute with R_e, square to -I, anticommute.
  for (const M4& q : {qi, qj, qk}) {
    EXPECT_EQ(mul(x, q), mul(q, x));
    EXPECT_EQ(mul(y, q), mul(q, y));
  }
  EXPECT_EQ(mul(x, x), neg(e0));
  EXPECT_EQ(mul(y, y), neg(e0));
  EXPECT_EQ(mul(x, y), neg(mul(y, x)));
  // R_e, x R_e, y R_e, xy R_e span all of M_4(R): the grading is a direct sum.
  std::vector<M4> basis;
  for (const M4& g : {e0, x, y, mul(x, y)}) {
    for (const M4& q : {e0, qi, qj, qk}) basis.push_back(mul(g, q));
  }
  EXPECT_EQ(rank16(basis), 16);
  // Relations read off the matrices: H x D(2,2;-,-). Compare with the catalog entry.
  Presentation from_matrices = tensor(quaternion(), basic_d(2, 2, -1, -1));
  EXPECT_TRUE(oracle_search(from_matrices, named("M4_4"), 1000000).has_value());
  EXPECT_FALSE(oracle_search(tensor(quaternion(), basic_d(2, 2, 1, 1)), named("M4_4"), 1000000).has_value());
}

// Relations of M2_8 from its Pauli-matrix realization: C^2 = -I, (wA)^4 = w^4 A^4 = -I.
TEST(Catalog, M28Relations) {
  Presentation p = named("M2_8");
  EXPECT_EQ(p.group.orders(), (std::vector<int>{2, 4}));
  EXPECT_EQ(p.gens[0].sign, -1);
  EXPECT_EQ(p.gens[1].sign, -1);
  EXPECT_EQ(commutation_exponent(p, p.gen(0), p.gen(1)), p.minus_one());
}
