#pragma once

// Builders for the standard algebra families and the two counterexample fixtures.

#include <cstddef>
#include <vector>

#include "trialg/algebra/fd_algebra.hpp"
#include "trialg/algebra/triangular.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

/// The field itself as a 1-dimensional algebra.
FDAlgebra scalar_algebra(Field field);
/// K[x]/(x^N) on the basis 1, x, ..., x^(N-1). Requires N >= 1.
FDAlgebra trunc_poly(std::size_t N, Field field);
/// Full matrix algebra M_n(K) on matrix units e_ij.
FDAlgebra full_matrix_algebra(std::size_t n, Field field);
/// Upper triangular matrices T_n(K) as a plain algebra.
FDAlgebra upper_triangular_algebra(std::size_t n, Field field);

/// T_n(K) = Trian(T_l(K), M_{l x (n-l)}(K), T_{n-l}(K)). Requires n >= 2 and
/// 1 <= split <= n - 1.
TriangularAlgebra upper_triangular(std::size_t n, Field field, std::size_t split = 1);
/// Block upper triangular algebra with diagonal block sizes `dims`, split
/// after the first `split_k` blocks.
TriangularAlgebra block_upper(const std::vector<std::size_t>& dims, std::size_t split_k,
                              Field field);
/// Trian(K[x]/(x^N), K[x]/(x^N), K[x]/(x^N)) with the regular bimodule.
TriangularAlgebra poly_triangular(std::size_t N, Field field);

/// Strictly upper triangular 3x3 matrices with the sign automorphism and the
/// map that drops the corner entry.
struct N3Fixture {
  FDAlgebra algebra;
  LinearEndo sigma;  // negates e12 and e23, fixes e13
  LinearEndo theta;  // a e12 + b e13 + c e23 -> a e12 + c e23
};
N3Fixture fixture_n3(Field field);

/// Trian(A, A, 0) with A = K[x]/(x^N), realised as A (+) A with product
/// (a, b)(c, d) = (ac, ad). Basis: x^i in the first slot, then x^i in the second.
struct TrianAA0Fixture {
  FDAlgebra algebra;
  std::size_t N;
  LinearEndo sigma_a;  // x -> -x on A
  LinearEndo sigma;    // (a, b) -> (sigma_A(a), sigma_A(b))
  LinearEndo d;        // (a, b) -> (0, sigma_A(a))
  LinearEndo D;        // (a, b) -> (a, sigma_A(a) + b)

  /// Element (a, b) from coefficient lists of the two polynomials.
  Vector element(const std::vector<long long>& a, const std::vector<long long>& b) const;
  Vector first_slot(const Vector& x) const;
  Vector second_slot(const Vector& x) const;
};
TrianAA0Fixture fixture_trian_AA0(std::size_t N, Field field);

}  // namespace trialg
