#include <gtest/gtest.h>

#include "bratteli/linear_algebra.hpp"

using namespace bratteli;

namespace {

GaussianRational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return GaussianRational(r);
}

}  // namespace

TEST(Scalar, GaussianArithmetic) {
  GaussianRational i(Rational(0), Rational(1));
  EXPECT_EQ(i * i, q(-1));
  EXPECT_EQ((q(1) + i).conj(), q(1) - i);
  EXPECT_EQ((q(1) + i).norm_squared(), Rational(2));
  EXPECT_EQ(q(1) / (q(1) + i), (q(1) - i) * q(1, 2));
  EXPECT_TRUE(q(0).is_zero());
  EXPECT_TRUE(q(1).is_one());
}

TEST(Scalar, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
}

TEST(RowEchelon, RankAndNullspace) {
  RowEchelon e(3);
  EXPECT_TRUE(e.insert({{0, q(1)}, {1, q(1)}}));
  EXPECT_TRUE(e.insert({{1, q(1)}, {2, q(1)}}));
  EXPECT_FALSE(e.insert({{0, q(1)}, {2, q(-1)}}));
  EXPECT_EQ(e.rank(), 2u);
  auto null = e.nullspace();
  ASSERT_EQ(null.size(), 1u);
  SparseVector v = null[0];
  EXPECT_EQ(v[0] + v[1], q(0));
  EXPECT_EQ(v[1] + v[2], q(0));
}

TEST(Span, ContainsAndEqual) {
  std::vector<SparseVector> a{{{0, q(1)}}, {{1, q(1)}}};
  std::vector<SparseVector> b{{{0, q(1)}, {1, q(2)}}, {{0, q(1)}, {1, q(-1)}}};
  EXPECT_TRUE(span_equal(a, b, 2));
  EXPECT_TRUE(span_contains(a, {{{1, q(3)}}}, 2));
  EXPECT_FALSE(span_contains({{{0, q(1)}}}, {{{1, q(1)}}}, 2));
  EXPECT_EQ(rank(b, 2), 2u);
}

TEST(SparseMatrix, ProductAndAdjoint) {
  auto a = SparseMatrix::unit(2, 0, 1);
  auto b = SparseMatrix::unit(2, 1, 0);
  EXPECT_EQ(a * b, SparseMatrix::unit(2, 0, 0));
  EXPECT_EQ(a.adjoint(), b);
  EXPECT_TRUE((a * a).is_zero());
  EXPECT_EQ(SparseMatrix::identity(3).rank(), 3u);
}

TEST(BlockMatrix, Arithmetic) {
  auto id = BlockMatrix::identity({1, 2});
  EXPECT_EQ(id * id, id);
  EXPECT_TRUE((id - id).is_zero());
  EXPECT_EQ(id.block_sizes(), (std::vector<std::size_t>{1, 2}));
}
