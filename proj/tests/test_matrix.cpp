#include <gtest/gtest.h>

#include "catquant/matrix.hpp"

using namespace catquant;

TEST(ComplexMatrix, LiteralAndIdentity) {
  const ComplexMatrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(1, 0), Complex(3, 0));
  EXPECT_EQ(ComplexMatrix::identity(2), (ComplexMatrix{{1, 0}, {0, 1}}));
}

TEST(ComplexMatrix, ProductMatchesHandComputation) {
  const ComplexMatrix a{{1, 2, 0}, {0, 1, 1}};
  const ComplexMatrix b{{1, 0}, {2, 1}, {0, 3}};
  EXPECT_EQ(a * b, (ComplexMatrix{{5, 2}, {2, 4}}));
  EXPECT_THROW(a * a, std::exception);
}

TEST(ComplexMatrix, AdjointConjugatesAndTransposes) {
  ComplexMatrix m(2, 3);
  m(0, 1) = Complex(1, 2);
  m(1, 2) = Complex(0, -1);
  const auto ad = m.adjoint();
  ASSERT_EQ(ad.rows(), 3u);
  EXPECT_EQ(ad(1, 0), Complex(1, -2));
  EXPECT_EQ(ad(2, 1), Complex(0, 1));
  EXPECT_EQ(ad.adjoint(), m);
}

TEST(ComplexMatrix, BlocksRoundTrip) {
  ComplexMatrix big(3, 3);
  const ComplexMatrix b{{1, 1}};
  big.set_block(2, 1, b);
  EXPECT_EQ(big.block(2, 1, 1, 2), b);
  EXPECT_EQ(big(2, 0), Complex(0));
}

TEST(ComplexMatrix, ZeroOneDetection) {
  EXPECT_TRUE((ComplexMatrix{{0, 1}, {1, 1}}).is_zero_one());
  EXPECT_FALSE((ComplexMatrix{{0, 2}}).is_zero_one());
  ComplexMatrix c(1, 1);
  c(0, 0) = Complex(0, 1);
  EXPECT_FALSE(c.is_zero_one());
}

TEST(ComplexMatrix, ApproxEqualUsesMaxAbsDifference) {
  const ComplexMatrix a{{1, 0}};
  ComplexMatrix b = a;
  b(0, 1) = Complex(0, 1e-13);
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(approx_equal(a, b, 1e-12));
  EXPECT_FALSE(approx_equal(a, b, 1e-14));
  EXPECT_DOUBLE_EQ(max_abs_diff(a, b), 1e-13);
}

TEST(ComplexMatrix, ApplyIsMatrixVectorProduct) {
  const ComplexMatrix m{{0, 1}, {1, 0}};
  const std::vector<Complex> v{Complex(1, 0), Complex(0, 1)};
  const auto w = m.apply(v);
  EXPECT_EQ(w[0], Complex(0, 1));
  EXPECT_EQ(w[1], Complex(1, 0));
}
