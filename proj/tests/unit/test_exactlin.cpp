#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "trialg/error.hpp"
#include "trialg/exactlin/matrix.hpp"
#include "trialg/exactlin/subspace.hpp"

using namespace trialg;

namespace {

Matrix random_matrix(Field F, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     std::size_t target_rank) {
  // Product of random rows x target_rank and target_rank x cols factors keeps the rank low.
  Matrix a(F, rows, target_rank), b(F, target_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < target_rank; ++k) a(i, k) = oracle::random_scalar(F, rng, 3);
  for (std::size_t k = 0; k < target_rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = oracle::random_scalar(F, rng, 3);
  return a * b;
}

}  // namespace

TEST(Scalar, RationalArithmeticMatchesGmp) {
  const Field Q = Field::rational();
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const long a = static_cast<long>(rng() % 41) - 20, b = static_cast<long>(rng() % 19) + 1;
    const long c = static_cast<long>(rng() % 41) - 20, d = static_cast<long>(rng() % 19) + 1;
    const mpq_class x(a, b), y(c, d);
    mpq_class xc = x, yc = y;
    xc.canonicalize();
    yc.canonicalize();
    const Scalar sx = Q.from_fraction(a, b), sy = Q.from_fraction(c, d);
    EXPECT_EQ((sx + sy).rational_value(), mpq_class(xc + yc));
    EXPECT_EQ((sx * sy).rational_value(), mpq_class(xc * yc));
    EXPECT_EQ((sx - sy).rational_value(), mpq_class(xc - yc));
    if (c != 0) EXPECT_EQ((sx / sy).rational_value(), mpq_class(xc / yc));
  }
}

TEST(Scalar, PrimeArithmeticMatchesIntegers) {
  const Field F = Field::prime(7);
  for (long long a = -10; a <= 10; ++a) {
    for (long long b = -10; b <= 10; ++b) {
      const auto mod = [](long long v) { return static_cast<std::uint64_t>(((v % 7) + 7) % 7); };
      EXPECT_EQ((F.from_int(a) + F.from_int(b)).residue(), mod(a + b));
      EXPECT_EQ((F.from_int(a) * F.from_int(b)).residue(), mod(a * b));
      if (mod(b) != 0) EXPECT_TRUE((F.from_int(b) * F.from_int(b).inverse()).is_one());
    }
  }
}

TEST(Scalar, TextRoundTrip) {
  const Field Q = Field::rational();
  EXPECT_EQ(Q.parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Q.parse("5").to_string(), "5");
  EXPECT_EQ(Field::prime(5).parse("-1").to_string(), "4");
  EXPECT_EQ(Field::prime(5).parse("1/2").to_string(), "3");
  EXPECT_THROW(Q.parse("1/0"), InvalidParameter);
  EXPECT_THROW(Q.parse("x"), InvalidParameter);
  EXPECT_THROW(Field::prime(9), InvalidParameter);
  EXPECT_THROW(Field::prime(2), InvalidParameter);
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_ANY_THROW(Field::rational().one() + Field::prime(5).one());
  EXPECT_THROW(Field::rational().zero().inverse(), std::domain_error);
}

TEST(Matrix, RankMatchesOracleOnRandomLowRankMatrices) {
  std::mt19937_64 rng(2);
  for (const Field F : {Field::rational(), Field::prime(5)}) {
    for (int t = 0; t < 12; ++t) {
      const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40, k = 1 + rng() % 12;
      const Matrix m = random_matrix(F, rows, cols, rng, k);
      EXPECT_EQ(m.rank(), oracle::rank(oracle::matrix_rows(m), cols));
    }
  }
}

TEST(Kernel, BasisIsAnnihilatedAndHasComplementaryDimension) {
  std::mt19937_64 rng(3);
  for (const Field F : {Field::rational(), Field::prime(3)}) {
    for (int t = 0; t < 12; ++t) {
      const std::size_t rows = 1 + rng() % 30, cols = 1 + rng() % 30, k = 1 + rng() % 10;
      const Matrix m = random_matrix(F, rows, cols, rng, k);
      const Subspace ker = kernel_basis(m);
      EXPECT_EQ(ker.dim() + m.rank(), cols);
      for (const Vector& v : ker.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
      const auto expected = oracle::kernel(oracle::matrix_rows(m), F, cols);
      EXPECT_EQ(ker, Subspace::span(F, cols, expected));
    }
  }
}

TEST(Subspace, CanonicalFormIgnoresGeneratorChoice) {
  std::mt19937_64 rng(4);
  const Field Q = Field::rational();
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 8, k = 1 + rng() % n;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(oracle::random_vector(Q, n, rng));
    std::vector<Vector> mixed;
    for (std::size_t i = 0; i < k; ++i) {
      Vector v = zero_vector(Q, n);
      for (const Vector& g : gens) axpy(oracle::random_scalar(Q, rng), g, v);
      mixed.push_back(std::move(v));
    }
    for (const Vector& g : gens) mixed.push_back(g);
    EXPECT_EQ(Subspace::span(Q, n, gens), Subspace::span(Q, n, mixed));
  }
}

TEST(Subspace, RrefShape) {
  const Field Q = Field::rational();
  const Subspace s = Subspace::span(Q, 3, {{Q.from_int(2), Q.from_int(4), Q.from_int(6)},
                                           {Q.from_int(1), Q.from_int(1), Q.from_int(1)}});
  ASSERT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.pivots(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.basis()[0], (Vector{Q.one(), Q.zero(), -Q.one()}));
  EXPECT_EQ(s.basis()[1], (Vector{Q.zero(), Q.one(), Q.from_int(2)}));
}

TEST(Subspace, DimensionFormulaForSumAndIntersection) {
  std::mt19937_64 rng(5);
  const Field Q = Field::rational();
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<Vector> a, b;
    for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i) a.push_back(oracle::random_vector(Q, n, rng, 1));
    for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i) b.push_back(oracle::random_vector(Q, n, rng, 1));
    const Subspace s = Subspace::span(Q, n, a), u = Subspace::span(Q, n, b);
    const Subspace sum = subspace_sum(s, u), meet = subspace_intersect(s, u);
    EXPECT_EQ(sum.dim() + meet.dim(), s.dim() + u.dim());
    EXPECT_TRUE(subspace_leq(meet, s));
    EXPECT_TRUE(subspace_leq(meet, u));
    EXPECT_TRUE(subspace_leq(s, sum));
    for (const Vector& v : meet.basis()) EXPECT_TRUE(s.contains(v) && u.contains(v));
  }
}

TEST(Subspace, ComplementProjectionKernelIsTheSubspace) {
  std::mt19937_64 rng(6);
  const Field F = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Vector> gens;
    for (std::size_t i = 0, k = rng() % (n + 1); i < k; ++i) gens.push_back(oracle::random_vector(F, n, rng));
    const Subspace s = Subspace::span(F, n, gens);
    EXPECT_EQ(kernel_basis(s.complement_projection()), s);
  }
}

TEST(SolveLinear, ConsistentAndInconsistentSystems) {
  std::mt19937_64 rng(7);
  const Field Q = Field::rational();
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(Q, 6, 5, rng, 3);
    const Vector x = oracle::random_vector(Q, 5, rng);
    const auto sol = solve_linear(m, m.apply(x));
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), m.apply(x));
  }
  Matrix m(Q, 2, 1);
  m(0, 0) = Q.one();
  m(1, 0) = Q.one();
  EXPECT_FALSE(solve_linear(m, {Q.one(), Q.zero()}).has_value());
}

TEST(Matrix, InverseOfRandomInvertibleMatrices) {
  std::mt19937_64 rng(8);
  for (const Field F : {Field::rational(), Field::prime(7)}) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng() % 8;
      const Matrix m = random_matrix(F, n, n, rng, n);
      const auto inv = m.inverse();
      EXPECT_EQ(inv.has_value(), m.rank() == n);
      if (inv) EXPECT_TRUE((m * *inv).is_identity());
    }
  }
  EXPECT_FALSE(Matrix(Field::rational(), 2, 3).inverse().has_value());
}
