#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "trialg/algebra/families.hpp"
#include "trialg/error.hpp"
#include "trialg/maps/predicates.hpp"
#include "trialg/maps/solve.hpp"
#include "trialg/theorems/theorems.hpp"

using namespace trialg;

namespace {

const Field Q = Field::rational();

LinearEndo diag_sign(const TriangularAlgebra& T) {
  return *conjugation(T.algebra(), T.embed(T.A().one(), T.M().zero(), -T.B().one()));
}

// Trian(K[x]/(x^2), K, K) where x kills M. Unfaithful, and x -> x extends to a
// nonzero commuting derivation.
TriangularAlgebra unfaithful_example() {
  const FDAlgebra A = trunc_poly(2, Q);
  const FDAlgebra B = scalar_algebra(Q);
  LeftAction left{{Vector{Q.one()}}, {Vector{Q.zero()}}};
  RightAction right{{Vector{Q.one()}}};
  return make_triangular(A, make_bimodule(A, B, {"m"}, left, right), B,
                         TriangularOptions{true, "unfaithful", std::nullopt});
}

}  // namespace

TEST(Posner, HoldsOnIdentityInstances) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(3, Q), block_upper({2, 1}, 1, Q)}) {
    const TheoremReport r = verify_posner(T, LinearEndo::identity(Q, T.dim()));
    EXPECT_TRUE(r.passed) << T.name();
    EXPECT_EQ(r.dimensions.at("intersection"), 0u);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(Posner, HoldsUnderTwists) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(2, Field::prime(5)), poly_triangular(3, Q)}) {
    EXPECT_TRUE(verify_posner(T, diag_sign(T), "sign").passed) << T.name();
    for (const auto& s : sample_automorphisms(T, 2, 3)) EXPECT_TRUE(verify_posner(T, s, "inner").passed);
  }
}

TEST(Posner, ReportsWitnessWhenConclusionFails) {
  const auto T = unfaithful_example();
  const LinearEndo id = LinearEndo::identity(Q, T.dim());
  const TheoremReport r = verify_posner(T, id);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(is_sigma_derivation(T.algebra(), *r.witness, id).ok);
  EXPECT_TRUE(check_bracket_condition(T.algebra(), *r.witness, id, BracketMode::centralizing).ok);
  EXPECT_FALSE(r.witness->is_zero());
}

TEST(Posner, NeedsFlagsForNonIdentityTwist) {
  const auto T = upper_triangular(3, Q);
  EXPECT_THROW(verify_posner(T, diag_sign(T), "sign"), HypothesisNotMet);
  EXPECT_THROW(verify_skew_zero(T, diag_sign(T), "sign"), HypothesisNotMet);
}

TEST(SkewZero, OnlyZeroIsSkewCommuting) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(3, Q), block_upper({2, 1}, 1, Q)}) {
    EXPECT_TRUE(verify_skew_zero(T, LinearEndo::identity(Q, T.dim())).passed) << T.name();
  }
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(2, Field::prime(5)), poly_triangular(3, Q)}) {
    const TheoremReport r = verify_skew_zero(T, diag_sign(T), "sign");
    EXPECT_TRUE(r.passed) << T.name();
    EXPECT_EQ(r.dimensions.at("skew_commuting"), 0u);
  }
}

TEST(SharmaDhara, InclusionOnUnitalInstances) {
  for (const auto& A : {upper_triangular(2, Q).algebra(), upper_triangular(3, Q).algebra(),
                        full_matrix_algebra(2, Q)}) {
    const TheoremReport r = verify_sharma_dhara(A);
    EXPECT_TRUE(r.passed) << A.name();
    EXPECT_LE(r.dimensions.at("skew_centralizing"), r.dimensions.at("commuting"));
  }
}

TEST(SharmaDhara, LeftIdentityOnly) {
  // Row matrices [[a, b], [0, 0]]: e11 is a left identity but not a right one.
  StructureConstants t(2, std::vector<Vector>(2, zero_vector(Q, 2)));
  t[0][0] = {Q.one(), Q.zero()};
  t[0][1] = {Q.zero(), Q.one()};
  const FDAlgebra R = make_algebra(Q, {"e11", "e12"}, t);
  const auto e = find_left_identity(R);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(*e, R.basis_element(0));
  EXPECT_TRUE(verify_sharma_dhara(R).passed);
  EXPECT_THROW(verify_sharma_dhara(fixture_n3(Q).algebra), HypothesisNotMet);
}

TEST(GdLeftMult, CentralizingGeneralizedDerivationsAreLeftMultipliers) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(3, Q)}) {
    const TheoremReport r = verify_gd_left_mult(T);
    EXPECT_TRUE(r.passed) << T.name();
    const MapSpace pairs = solve_centralizing_generalized_pairs(T.algebra());
    for (std::size_t k = 0; k < pairs.dim(); ++k) {
      auto [D, d] = pairs.pair(k);
      EXPECT_TRUE(d.is_zero());
      EXPECT_TRUE(is_left_multiplier(T.algebra(), D).ok);
    }
  }
}

TEST(Mayne, SampledAutomorphismsAreNotCentralizing) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(2, Field::prime(5))}) {
    const TheoremReport r = verify_mayne(T, 50, 2024);
    EXPECT_TRUE(r.passed) << T.name();
    EXPECT_EQ(r.dimensions.at("not_centralizing"), 50u);
  }
  EXPECT_THROW(verify_mayne(upper_triangular(3, Q), 5, 1), HypothesisNotMet);
}

TEST(Mayne, SamplerIsDeterministicAndSound) {
  const auto T = poly_triangular(2, Field::prime(3));
  const auto a = sample_automorphisms(T, 12, 99);
  const auto b = sample_automorphisms(T, 12, 99);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_automorphisms(T, 12, 100));
  for (const auto& s : a) {
    EXPECT_TRUE(is_automorphism(T.algebra(), s).ok);
    EXPECT_FALSE(s.is_identity());
  }
}
