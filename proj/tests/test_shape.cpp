#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kisin/errors.hpp"
#include "kisin/linalg.hpp"
#include "kisin/shape.hpp"

using namespace kisin;

namespace {

TruncSeries poly(const SeriesRing& R, std::vector<int> c) {
  std::vector<Fq> v;
  for (int x : c) v.push_back(R.field().from_int(x));
  return R.from_coeffs(v);
}

// All 2x2 matrices over F_q, counted directly.
int count_gl2(const GaloisField& F) {
  int n = 0;
  for (Fq a : F.elements())
    for (Fq b : F.elements())
      for (Fq c : F.elements())
        for (Fq d : F.elements())
          if (F.sub(F.mul(a, d), F.mul(b, c)).code != 0) ++n;
  return n;
}

// Independent check of the rank-2 statement: enumerate x_12 and every
// 2x2 matrix, multiply out XA and test the conclusion.
int naive_rank2_counterexamples(const GaloisField& F, int t1, int t2) {
  const int p = F.characteristic();
  SeriesRing R(F, 2 * p + 2);
  int bad = 0;
  std::vector<Fq> coeffs(static_cast<std::size_t>(t2), F.zero());
  while (true) {
    SeriesMatrix X = R.zero_matrix(2, 2);
    X(0, 0) = R.monomial(F.one(), t1);
    X(1, 1) = R.monomial(F.one(), t2);
    X(0, 1) = R.from_coeffs(coeffs);
    bool p_ok = true;
    for (int k = 0; k < t2; ++k)
      if (coeffs[static_cast<std::size_t>(k)].code != 0 && !(t2 > t1 && k == t1)) p_ok = false;
    for (Fq a : F.elements())
      for (Fq b : F.elements())
        for (Fq c : F.elements())
          for (Fq d : F.elements()) {
            if (F.sub(F.mul(a, d), F.mul(b, c)).code == 0) continue;
            FqMatrix A(2, 2);
            A(0, 0) = a;
            A(0, 1) = b;
            A(1, 0) = c;
            A(1, 1) = d;
            const SeriesMatrix XA = R.mul(X, R.from_constant(A));
            bool hyp = true;
            for (int col = 0; col < 2; ++col)
              for (int row = 0; row < 2; ++row) {
                const auto v = R.val(XA(row, col));
                if (!v.infinite() && *v.value < (col == 0 ? t1 : t2)) hyp = false;
              }
            if (hyp && !p_ok) ++bad;
          }
    std::size_t k = 0;
    while (k < coeffs.size() && coeffs[k].code + 1 == F.order()) coeffs[k++] = F.zero();
    if (k == coeffs.size()) break;
    coeffs[k] = Fq{coeffs[k].code + 1};
  }
  return bad;
}

TriangularKisin random_p_shape(const SeriesRing& R, int d, int f, std::mt19937& rng) {
  const GaloisField& F = R.field();
  const int p = R.p();
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1), unit(1, F.order() - 1);
  std::vector<std::vector<int>> t(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(f)));
  for (int s = 0; s < f; ++s) {
    std::vector<int> w(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k) w[static_cast<std::size_t>(k)] = k;
    std::shuffle(w.begin(), w.end(), rng);
    for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(i)];
  }
  std::vector<Fq> a;
  for (int i = 0; i < d; ++i) a.push_back(Fq{unit(rng)});
  TriangularKisin M = TriangularKisin::diagonal(R, t, a);
  for (int s = 0; s < f; ++s)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const int ti = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        if (t[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)] > ti) M.x(s, i, j) = R.monomial(Fq{pick(rng)}, ti);
      }
  return M;
}

}  // namespace

TEST(Shape, DiagonalIsInShape) {
  GaloisField F(3, 1);
  SeriesRing R(F, 10);
  const auto M = TriangularKisin::diagonal(R, {{1, 0}, {2, 3}}, {F.one(), F.from_int(2)});
  EXPECT_NO_THROW(M.validate(R));
  const auto c = classify_shape(M, 3);
  EXPECT_TRUE(c.p_shape);
  EXPECT_TRUE(c.deg_ok);
  EXPECT_EQ(c.free_slots, 2);
}

TEST(Shape, EntryPredicates) {
  GaloisField F(3, 1);
  SeriesRing R(F, 10);
  auto M = TriangularKisin::diagonal(R, {{1}, {2}}, {F.one(), F.one()});
  M.x(0, 0, 1) = poly(R, {0, 1});
  auto c = classify_shape(M, 3);
  EXPECT_TRUE(c.p_shape);
  M.x(0, 0, 1) = poly(R, {1});
  c = classify_shape(M, 3);
  EXPECT_FALSE(c.p_shape);
  EXPECT_TRUE(c.deg_ok);
  M.x(0, 0, 1) = poly(R, {0, 0, 1});
  EXPECT_FALSE(classify_shape(M, 3).deg_ok);
}

TEST(Shape, ExtraTermSlotsNeedAHom) {
  GaloisField F(3, 1);
  SeriesRing R(F, 10);
  // n_2 = (2) maps to n_1 = (0): alpha difference 1.
  const auto M = TriangularKisin::diagonal(R, {{0}, {2}}, {F.one(), F.one()});
  const auto c = classify_shape(M, 3);
  ASSERT_EQ(c.extra_term_slots.size(), 1u);
  EXPECT_EQ(c.extra_term_slots[0].degree, 3);
  const auto N = TriangularKisin::diagonal(R, {{2}, {0}}, {F.one(), F.one()});
  EXPECT_TRUE(classify_shape(N, 3).extra_term_slots.empty());
}

TEST(Shape, AllowableProcedureExample) {
  GaloisField F(3, 1);
  SeriesRing R(F, 10);
  auto M = TriangularKisin::diagonal(R, {{1}, {2}}, {F.one(), F.one()});
  M.x(0, 0, 1) = poly(R, {0, 1});
  const auto out = allowable_procedure(R, M, {0, 1, {F.one()}});
  EXPECT_EQ(out, TriangularKisin::diagonal(R, {{1}, {2}}, {F.one(), F.one()}));
  EXPECT_EQ(allowable_procedure(R, M, {0, 1, {F.zero()}}), M);
  const auto there = allowable_procedure(R, M, {0, 1, {F.from_int(2)}});
  EXPECT_EQ(allowable_procedure(R, there, {0, 1, {F.from_int(1)}}), M);
  EXPECT_THROW(allowable_procedure(R, M, {1, 0, {F.one()}}), InvalidMove);
  const auto W = TriangularKisin::diagonal(R, {{2}, {1}}, {F.one(), F.one()});
  EXPECT_THROW(allowable_procedure(R, W, {0, 1, {F.one()}}), InvalidMove);
}

TEST(Shape, NormalizeExamples) {
  GaloisField F(3, 1);
  SeriesRing R(F, 10);
  const auto D = TriangularKisin::diagonal(R, {{0}, {1}, {2}}, {F.one(), F.one(), F.one()});
  EXPECT_TRUE(normalize_to_diagonal(R, D).moves.empty());

  auto M = D;
  M.x(0, 0, 1) = poly(R, {1});
  M.x(0, 0, 2) = poly(R, {2});
  M.x(0, 1, 2) = poly(R, {0, 1});
  const auto n = normalize_to_diagonal(R, M);
  EXPECT_EQ(n.diagonal, D);
  ASSERT_EQ(n.moves.size(), 3u);
  EXPECT_EQ(n.moves[0].i, 1);
  EXPECT_EQ(n.moves[0].j, 2);
  EXPECT_EQ(n.moves[1].i, 0);
  EXPECT_EQ(n.moves[1].j, 2);
  EXPECT_EQ(replay(R, M, n.moves), D);
  EXPECT_EQ(replay(R, D, inverse_moves(F, n.moves)), M);

  M.x(0, 0, 1) = poly(R, {1, 1});
  EXPECT_THROW(normalize_to_diagonal(R, M), ShapeError);
}

TEST(Shape, NormalizeRoundTripRandom) {
  GaloisField F(3, 1);
  SeriesRing R(F, 13);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 4, f = 1 + trial % 2;
    const auto M = random_p_shape(R, d, f, rng);
    const auto n = normalize_to_diagonal(R, M);
    const auto c = classify_shape(n.diagonal, 3);
    EXPECT_TRUE(c.p_shape);
    for (int s = 0; s < f; ++s)
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) EXPECT_TRUE(n.diagonal.x(s, i, j).is_zero());
    EXPECT_EQ(replay(R, n.diagonal, inverse_moves(F, n.moves)), M);
    // Every intermediate step keeps (DEG) and the shape.
    auto cur = M;
    for (const auto& mv : n.moves) {
      cur = allowable_procedure(R, cur, mv);
      const auto cc = classify_shape(cur, 3);
      EXPECT_TRUE(cc.deg_ok && cc.p_shape);
    }
  }
}

TEST(Shape, ColumnDivisibility) {
  GaloisField F(3, 1);
  SeriesRing R(F, 10);
  SeriesMatrix X = R.zero_matrix(2, 2);
  X(0, 0) = R.monomial(F.one(), 0);
  X(1, 1) = R.monomial(F.one(), 2);
  const std::vector<int> t{0, 2};
  EXPECT_EQ(column_divisibility(R, X, identity_matrix(F, 2), t), (std::vector<bool>{true, true}));
  FqMatrix A = identity_matrix(F, 2);
  A(0, 1) = F.one();  // column 1 picks up the u^0 row
  EXPECT_EQ(column_divisibility(R, X, A, t), (std::vector<bool>{true, false}));
  EXPECT_EQ(column_divisibility(R, X, A, {0, 0}), (std::vector<bool>{true, true}));
  EXPECT_THROW(column_divisibility(R, X, FqMatrix(2, 2, F.zero()), t), InvalidInput);
}

TEST(ShapeVerify, RankTwoExample) {
  GaloisField F(3, 1);
  const auto rep = shapelemma_verify(F, {2, {0, 2}, true, 0, 1, 1u << 20});
  EXPECT_EQ(rep.x_checked, 9u);
  EXPECT_EQ(rep.gl_order, 48u);
  EXPECT_EQ(static_cast<int>(rep.gl_order), count_gl2(F));
  EXPECT_EQ(rep.pairs_checked, 9u * 48u);
  EXPECT_TRUE(rep.counterexamples.empty());
  EXPECT_GT(rep.hypothesis_pairs, 0u);
  EXPECT_TRUE(rep.last_weight_max);
}

TEST(ShapeVerify, AgreesWithNaiveOracle) {
  for (int p : {3, 5}) {
    GaloisField F(p, 1);
    for (int t1 = 0; t1 <= p; ++t1)
      for (int t2 = 0; t2 <= p; ++t2) {
        if (t1 == t2 || (p == 5 && t2 > 3)) continue;
        const auto rep = shapelemma_verify(F, {2, {t1, t2}, true, 0, 1, 1u << 20});
        EXPECT_EQ(static_cast<int>(rep.counterexamples.size()), naive_rank2_counterexamples(F, t1, t2));
        EXPECT_TRUE(rep.counterexamples.empty());
      }
  }
}

TEST(ShapeVerify, HypothesisIsNeeded) {
  // Without the divisibility hypothesis many X fail the conclusion.
  GaloisField F(3, 1);
  const auto rep = shapelemma_verify(F, {2, {0, 3}, true, 0, 1, 1u << 20});
  EXPECT_GT(rep.x_without_p, 0u);
  EXPECT_TRUE(rep.counterexamples.empty());
}

TEST(ShapeVerify, TrivialAndRandomized) {
  GaloisField F(3, 1);
  EXPECT_TRUE(shapelemma_verify(F, {1, {2}, true, 0, 1, 10}).counterexamples.empty());
  const auto rep = shapelemma_verify(F, {3, {0, 1, 2}, false, 2000, 3, 0});
  EXPECT_EQ(rep.x_checked, 2000u);
  EXPECT_EQ(rep.gl_order, 11232u);
  EXPECT_TRUE(rep.counterexamples.empty());
  EXPECT_THROW(shapelemma_verify(F, {2, {0, 3}, true, 0, 1, 5}), BudgetError);
  EXPECT_THROW(shapelemma_verify(F, {2, {1, 1}, true, 0, 1, 5}), InvalidInput);
}

TEST(DiagRecovery, Identity) {
  GaloisField F(3, 1);
  SeriesRing R(F, 8);
  const auto r = diag_recovery_check(R, R.identity(2), {0, 2}, R.identity(2));
  EXPECT_TRUE(r.triangular);
  EXPECT_EQ(r.t, (std::vector<int>{0, 2}));
  EXPECT_TRUE(r.holds);
}

TEST(DiagRecovery, PermutationSimilar) {
  GaloisField F(3, 1);
  SeriesRing R(F, 8);
  SeriesMatrix B = R.zero_matrix(2, 2);
  B(0, 1) = R.one();
  B(1, 0) = R.one();
  // B D is [[0, u^2], [1, 0]]; not triangular, so the check is vacuous.
  auto r = diag_recovery_check(R, B, {0, 2}, R.identity(2));
  EXPECT_FALSE(r.triangular);
  // B D B is diagonal with swapped exponents.
  r = diag_recovery_check(R, B, {0, 2}, B);
  EXPECT_TRUE(r.triangular);
  EXPECT_EQ(r.t, (std::vector<int>{2, 0}));
  EXPECT_TRUE(r.holds);
  EXPECT_THROW(diag_recovery_check(R, R.zero_matrix(2, 2), {0, 2}, B), InvalidInput);
  SeriesMatrix bad = R.identity(2);
  bad(0, 1) = R.monomial(F.one(), 1);
  EXPECT_THROW(diag_recovery_check(R, R.identity(2), {0, 2}, bad), InvalidInput);
}

TEST(DiagRecovery, RandomTriangularizedInstances) {
  GaloisField F(3, 1);
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::uint32_t> pick(0, 2);
  for (int d : {2, 3}) {
    SeriesRing R(F, d == 2 ? 8 : 10);
    for (int trial = 0; trial < 200; ++trial) {
      SeriesMatrix B0 = R.zero_matrix(d, d), A = R.zero_matrix(d, d);
      do {
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < R.precision(); ++k) {
              B0(i, j)[k] = Fq{pick(rng)};
              A(i, j)[k] = k % 3 == 0 ? Fq{pick(rng)} : Fq{0};
            }
        FqMatrix b(d, d), a(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            b(i, j) = B0(i, j)[0];
            a(i, j) = A(i, j)[0];
          }
        if (is_invertible(F, b) && is_invertible(F, a)) break;
      } while (true);
      std::vector<int> r(static_cast<std::size_t>(d));
      for (auto& x : r) x = static_cast<int>(pick(rng)) + (pick(rng) == 0 ? 1 : 0);
      std::sort(r.begin(), r.end());
      SeriesMatrix D = R.zero_matrix(d, d);
      for (int i = 0; i < d; ++i) D(i, i) = R.monomial(F.one(), r[static_cast<std::size_t>(i)]);
      const SeriesMatrix H = left_triangularizer(R, R.mul(R.mul(B0, D), A));
      const auto res = diag_recovery_check(R, R.mul(H, B0), r, A);
      ASSERT_TRUE(res.triangular);
      EXPECT_TRUE(res.holds);
    }
  }
}
