#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "trialg/algebra/bimodule.hpp"
#include "trialg/algebra/center.hpp"
#include "trialg/algebra/families.hpp"
#include "trialg/algebra/idempotents.hpp"
#include "trialg/error.hpp"
#include "trialg/maps/linear_endo.hpp"

using namespace trialg;

namespace {

const Field Q = Field::rational();

// Two-dimensional algebra spanned by a, b with a*a = b and everything else zero,
// except for an optional deliberate defect.
FDAlgebra nilpotent_pair(bool break_associativity) {
  StructureConstants t(2, std::vector<Vector>(2, zero_vector(Q, 2)));
  t[0][0] = {Q.zero(), Q.one()};
  if (break_associativity) t[0][1] = {Q.one(), Q.zero()};
  return make_algebra(Q, {"a", "b"}, t);
}

}  // namespace

TEST(FDAlgebra, AssociativityViolationNamesFirstTriple) {
  EXPECT_NO_THROW(nilpotent_pair(false));
  try {
    nilpotent_pair(true);
    FAIL() << "expected AssociativityViolation";
  } catch (const AssociativityViolation& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 0u);
    EXPECT_EQ(e.k, 0u);
  }
}

TEST(FDAlgebra, RejectsBadUnitAndShapes) {
  StructureConstants t(2, std::vector<Vector>(2, zero_vector(Q, 2)));
  t[0][0] = {Q.one(), Q.zero()};
  EXPECT_THROW(make_algebra(Q, {"e", "n"}, t, Vector{Q.one(), Q.zero()}), UnitViolation);
  EXPECT_THROW(make_algebra(Q, {"e"}, t), InvalidParameter);
}

TEST(FDAlgebra, FormatUsesLabels) {
  const FDAlgebra N = fixture_n3(Q).algebra;
  EXPECT_EQ(N.format(N.basis_element(0) + N.basis_element(2)), "e12 + e23");
  EXPECT_EQ(N.format(Q.from_int(-2) * N.basis_element(1)), "-2*e13");
  EXPECT_EQ(N.format(N.zero()), "0");
}

TEST(Families, DimensionsAndFlags) {
  EXPECT_EQ(upper_triangular(2, Q).dim(), 3u);
  EXPECT_EQ(upper_triangular(3, Q).dim(), 6u);
  EXPECT_EQ(upper_triangular(4, Q, 2).dim(), 10u);
  EXPECT_EQ(block_upper({2, 1}, 1, Q).dim(), 7u);
  EXPECT_EQ(poly_triangular(3, Q).dim(), 9u);
  EXPECT_EQ(full_matrix_algebra(2, Q).dim(), 4u);
  EXPECT_TRUE(upper_triangular(2, Q).hypothesis_flags());
  EXPECT_FALSE(upper_triangular(3, Q).hypothesis_flags());
  EXPECT_TRUE(poly_triangular(3, Q).hypothesis_flags());
  EXPECT_FALSE(block_upper({2, 1}, 1, Q).hypothesis_flags());
  EXPECT_THROW(upper_triangular(1, Q), InvalidParameter);
  EXPECT_THROW(upper_triangular(3, Q, 3), InvalidParameter);
}

TEST(Triangular, MatrixFamilyProductsAgreeWithMatrixMultiplication) {
  std::mt19937_64 rng(11);
  for (const auto& T : {upper_triangular(3, Q), upper_triangular(4, Q, 2), block_upper({2, 1}, 1, Q)}) {
    const MatrixLayout& layout = *T.matrix_layout();
    for (int t = 0; t < 200; ++t) {
      const Vector x = oracle::random_vector(Q, T.dim(), rng);
      const Vector y = oracle::random_vector(Q, T.dim(), rng);
      const auto expected = oracle::square_product(oracle::to_square(layout, Q, x),
                                                   oracle::to_square(layout, Q, y), Q);
      EXPECT_EQ(oracle::to_square(layout, Q, T.algebra().mul(x, y)), expected);
    }
  }
}

TEST(Triangular, BlockProductRule) {
  std::mt19937_64 rng(12);
  const auto T = poly_triangular(3, Field::prime(5));
  const Field F = T.field();
  for (int t = 0; t < 200; ++t) {
    const Vector a = oracle::random_vector(F, 3, rng), a2 = oracle::random_vector(F, 3, rng);
    const Vector m = oracle::random_vector(F, 3, rng), m2 = oracle::random_vector(F, 3, rng);
    const Vector b = oracle::random_vector(F, 3, rng), b2 = oracle::random_vector(F, 3, rng);
    const Vector prod = T.algebra().mul(T.embed(a, m, b), T.embed(a2, m2, b2));
    EXPECT_EQ(T.project(Block::A, prod), oracle::mul(T.A(), a, a2));
    EXPECT_EQ(T.project(Block::M, prod), oracle::mul(T.A(), a, m2) + oracle::mul(T.A(), m, b2));
    EXPECT_EQ(T.project(Block::B, prod), oracle::mul(T.B(), b, b2));
  }
  EXPECT_EQ(T.algebra().one(), T.p() + T.q());
  EXPECT_EQ(T.algebra().mul(T.p(), T.p()), T.p());
  EXPECT_TRUE(is_zero(T.algebra().mul(T.q(), T.p())));
}

TEST(Triangular, UnfaithfulBimoduleRejected) {
  // A = K x K acting on M = K through the first factor only.
  StructureConstants t(2, std::vector<Vector>(2, zero_vector(Q, 2)));
  t[0][0] = {Q.one(), Q.zero()};
  t[1][1] = {Q.zero(), Q.one()};
  const FDAlgebra A = make_algebra(Q, {"u", "v"}, t, Vector{Q.one(), Q.one()});
  const FDAlgebra B = scalar_algebra(Q);
  LeftAction left{{Vector{Q.one()}}, {Vector{Q.zero()}}};
  RightAction right{{Vector{Q.one()}}};
  Bimodule M = make_bimodule(A, B, {"m"}, left, right);
  EXPECT_THROW(make_triangular(A, M, B), NotFaithful);
  EXPECT_NO_THROW(make_triangular(A, M, B, TriangularOptions{true, "", std::nullopt}));
  EXPECT_EQ(left_annihilator(A, M).size(), 1u);
}

TEST(Bimodule, ViolationsDetected) {
  const FDAlgebra K = scalar_algebra(Q);
  LeftAction left{{Vector{Q.from_int(2)}}};
  RightAction right{{Vector{Q.one()}}};
  EXPECT_THROW(make_bimodule(K, K, {"m"}, left, right), BimoduleViolation);
  EXPECT_THROW(make_bimodule(K, K, {}, {{}}, {}), ZeroModule);
}

TEST(Center, TnHasOneDimensionalCenterMatchingOracle) {
  for (std::size_t n : {2, 3, 4}) {
    const auto T = upper_triangular(n, Q);
    const CenterData c = center(T);
    EXPECT_EQ(c.center.dim(), 1u) << n;
    EXPECT_EQ(c.center, Subspace::span(Q, T.dim(), oracle::center(T.algebra())));
    EXPECT_TRUE(c.center.contains(T.algebra().one()));
  }
}

TEST(Center, CenterOfPolyTriangularIsDiagonalCopy) {
  const auto T = poly_triangular(3, Q);
  const CenterData c = center(T);
  EXPECT_EQ(c.center, Subspace::span(Q, T.dim(), oracle::center(T.algebra())));
  EXPECT_EQ(c.center.dim(), 3u);
  EXPECT_EQ(c.pi_a_center.dim(), 3u);
  // tau is the identity of K[x]/(x^3): a m = m tau(a).
  EXPECT_TRUE(c.tau.is_identity());
}

TEST(SigmaCenter, DiagSignAutomorphism) {
  const auto T = upper_triangular(2, Q);
  const auto sigma = conjugation(T.algebra(), T.embed({Q.one()}, {Q.zero()}, {-Q.one()}));
  ASSERT_TRUE(sigma.has_value());
  const SigmaCenterData z = sigma_center(T, *sigma);
  EXPECT_TRUE(z.structural_checked);
  // Solve sigma(x) l = l x directly for the sample.
  oracle::Rows rows;
  const FDAlgebra& A = T.algebra();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t r = 0; r < A.dim(); ++r) {
      Vector row(A.dim(), Q.zero());
      for (std::size_t l = 0; l < A.dim(); ++l) {
        row[l] = oracle::mul(A, (*sigma)(A.basis_element(i)), A.basis_element(l))[r] -
                 A.basis_product(l, i)[r];
      }
      rows.push_back(row);
    }
  }
  EXPECT_EQ(z.sigma_center, Subspace::span(Q, A.dim(), oracle::kernel(rows, Q, A.dim())));
  EXPECT_THROW(sigma_center(T, LinearEndo::zero(Q, 3)), NotAutomorphism);
}

TEST(Idempotents, TruncatedPolynomialsAndMatrices) {
  const Field F3 = Field::prime(3);
  EXPECT_TRUE(has_only_trivial_idempotents_bruteforce(trunc_poly(3, F3)));
  EXPECT_TRUE(has_only_trivial_idempotents_bruteforce(upper_triangular_algebra(1, F3)));
  const auto e = find_nontrivial_idempotent(full_matrix_algebra(2, F3));
  ASSERT_TRUE(e.has_value());
  const FDAlgebra M2 = full_matrix_algebra(2, F3);
  EXPECT_EQ(M2.mul(*e, *e), *e);
  EXPECT_FALSE(is_zero(*e));
  EXPECT_NE(*e, M2.one());
  EXPECT_TRUE(find_nontrivial_idempotent(upper_triangular(2, F3).algebra()).has_value());
  EXPECT_THROW(find_nontrivial_idempotent(trunc_poly(2, Q)), InvalidParameter);
  EXPECT_THROW(find_nontrivial_idempotent(full_matrix_algebra(3, F3), 1000), EnumerationTooLarge);
}

TEST(Idempotents, DeclaredFlagsAreSoundOnSmallFields) {
  for (std::uint64_t p : {3, 5}) {
    const Field F = Field::prime(p);
    for (const auto& T : {upper_triangular(2, F), poly_triangular(2, F)}) {
      EXPECT_TRUE(has_only_trivial_idempotents_bruteforce(T.A()));
      EXPECT_TRUE(has_only_trivial_idempotents_bruteforce(T.B()));
    }
  }
}

TEST(Fixtures, N3Products) {
  const N3Fixture fx = fixture_n3(Q);
  const FDAlgebra& N = fx.algebra;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const bool corner = i == 0 && j == 2;
      EXPECT_EQ(N.basis_product(i, j), corner ? N.basis_element(1) : N.zero());
    }
  }
  EXPECT_FALSE(N.is_unital());
}

TEST(Fixtures, TrianAA0Products) {
  const TrianAA0Fixture fx = fixture_trian_AA0(4, Q);
  const FDAlgebra& T = fx.algebra;
  ASSERT_EQ(T.dim(), 8u);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const Vector x = oracle::random_vector(Q, 8, rng), y = oracle::random_vector(Q, 8, rng);
    const FDAlgebra A = trunc_poly(4, Q);
    const Vector xy = T.mul(x, y);
    EXPECT_EQ(fx.first_slot(xy), A.mul(fx.first_slot(x), fx.first_slot(y)));
    EXPECT_EQ(fx.second_slot(xy), A.mul(fx.first_slot(x), fx.second_slot(y)));
  }
}

TEST(Elements, InversesAndConjugation) {
  const auto T = upper_triangular(3, Q);
  const FDAlgebra& A = T.algebra();
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const Vector u = oracle::random_vector(Q, A.dim(), rng);
    const auto inv = inverse_element(A, u);
    const auto sq = oracle::to_square(*T.matrix_layout(), Q, u);
    const bool invertible = !sq[0][0].is_zero() && !sq[1][1].is_zero() && !sq[2][2].is_zero();
    EXPECT_EQ(inv.has_value(), invertible);
    if (inv) EXPECT_EQ(A.mul(u, *inv), A.one());
  }
}
