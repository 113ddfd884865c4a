#include <gtest/gtest.h>

#include "detsum/error.hpp"
#include "detsum/mat2.hpp"
#include "oracles.hpp"

namespace detsum {
namespace {

template <class Fn>
void for_each_matrix(std::uint32_t p, Fn&& fn) {
  for (Residue a = 0; a < p; ++a)
    for (Residue b = 0; b < p; ++b)
      for (Residue c = 0; c < p; ++c)
        for (Residue d = 0; d < p; ++d) fn(Mat2{a, b, c, d});
}

TEST(Mat2, ProductExamples) {
  const PrimeField F(11);
  const Mat2 A{3, 7, 2, 9};
  EXPECT_EQ(mul(A, Mat2::identity(), F), A);
  EXPECT_EQ(mul(Mat2::identity(), A, F), A);
  const Mat2 nil{0, 1, 0, 0};
  EXPECT_EQ(mul(nil, nil, F), Mat2{});
  const Mat2 shear{1, 1, 0, 1};
  EXPECT_EQ(mul(shear, shear, F), (Mat2{1, 2, 0, 1}));
  EXPECT_EQ(det(A, F), F.reduce(3 * 9 - 7 * 2));
  EXPECT_EQ(trace(A, F), 1U);
}

TEST(Mat2, SquareRootExamples) {
  const PrimeField F5(5);
  const auto id = has_square_root(Mat2::identity(), F5);
  ASSERT_TRUE(id.found);
  EXPECT_EQ(mul(id.root, id.root, F5), Mat2::identity());

  EXPECT_FALSE(has_square_root(Mat2{0, 1, 0, 0}, F5).found);
  EXPECT_FALSE(has_square_root(Mat2{0, 1, 0, 0}, PrimeField(13)).found);

  EXPECT_EQ(F5.legendre(2), -1);
  EXPECT_FALSE(has_square_root(Mat2{2, 0, 0, 1}, F5).found);
}

TEST(Mat2, ScalarMatricesAlwaysHaveRoots) {
  for (std::uint32_t p : {3U, 5U, 7U, 101U}) {
    const PrimeField F(p);
    for (Residue u = 0; u < p; ++u) {
      const auto w = has_square_root(Mat2::scalar(u), F);
      ASSERT_TRUE(w.found) << u << " mod " << p;
      ASSERT_EQ(mul(w.root, w.root, F), Mat2::scalar(u));
    }
  }
}

// Central check: the decision procedure against the set of all B^2,
// gathered independently of the library.
TEST(Mat2, DecisionMatchesExhaustiveSquares) {
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U}) {
    const PrimeField F(p);
    const auto squares = oracle::squares(p);
    const SquareTable table = mark_squares(F);
    std::uint64_t disagreements = 0;
    for_each_matrix(p, [&](const Mat2& A) {
      const SquareWitness w = has_square_root(A, F);
      const bool in_oracle = squares.contains({A.a, A.b, A.c, A.d});
      if (w.found != in_oracle || table.contains(A) != in_oracle) ++disagreements;
      if (w.found && mul(w.root, w.root, F) != A) ++disagreements;
      if (F.legendre(det(A, F)) == -1 && w.found) ++disagreements;
    });
    EXPECT_EQ(disagreements, 0U) << "p=" << p;
    EXPECT_EQ(table.popcount(), squares.size());
  }
}

TEST(Mat2, CensusOfThree) {
  const PrimeField F(3);
  const Census cs = census(F);
  EXPECT_EQ(cs.n_total, 81U);
  // Golden value from the brute-force square set.
  const auto squares = oracle::squares(3);
  std::uint64_t expected = 0;
  for_each_matrix(3, [&](const Mat2& A) {
    if (det(A, F) != 0 && !squares.contains({A.a, A.b, A.c, A.d})) ++expected;
  });
  EXPECT_EQ(expected, 32U);
  EXPECT_EQ(cs.n_nonsquare_invertible, 32U);
  EXPECT_EQ(cs.n_square, squares.size());
}

TEST(Mat2, CensusTotalsAreConsistent) {
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U, 17U}) {
    const Census cs = census(PrimeField(p));
    const std::uint64_t pp = p;
    const std::uint64_t gl2 = (pp * pp - 1) * (pp * pp - pp);
    EXPECT_EQ(cs.n_total, pp * pp * pp * pp);
    EXPECT_EQ(cs.n_total - cs.n_singular, gl2);
    EXPECT_EQ(cs.n_square + cs.n_nonsquare_invertible + cs.n_nonsquare_singular, cs.n_total);
    EXPECT_LE(cs.n_nonsquare_invertible, pp * pp * pp * pp - pp * pp * pp - pp * pp + pp);
    EXPECT_GE(cs.n_square, pp * pp);
    EXPECT_GT(cs.ratio, 0.0);
    EXPECT_LT(cs.ratio, 1.0);
  }
}

TEST(Mat2, CensusIsWorkerCountIndependent) {
  const PrimeField F(19);
  const Census one = census(F, 1);
  const Census many = census(F, 4);
  EXPECT_EQ(one.n_square, many.n_square);
  EXPECT_EQ(one.n_nonsquare_invertible, many.n_nonsquare_invertible);
  EXPECT_EQ(one.n_nonsquare_singular, many.n_nonsquare_singular);
}

TEST(Mat2, CensusRefusesLargePrimes) {
  const PrimeField F(131);
  try {
    (void)census(F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Mat2, PairImageCounts) {
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 31U, 101U}) {
    const PairImageCensus pc = pair_image_census(PrimeField(p));
    const std::uint64_t pp = p;
    EXPECT_LE(pc.image_size, pp * pp);
    EXPECT_EQ(pc.type_a + pc.type_b, pp * (pp + 1) / 2);
    EXPECT_LE(pc.twice_degeneracy(), 2 * 4 * pp) << p;
  }
  const PairImageCensus p11 = pair_image_census(PrimeField(11));
  EXPECT_LE(std::abs(static_cast<double>(p11.image_size) - 3.0 * 121 / 8), 44.0);
  EXPECT_THROW((void)pair_image_census(PrimeField(10007)), Error);
}

}  // namespace
}  // namespace detsum
