#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trialg/algebra/fd_algebra.hpp"
#include "trialg/exactlin/matrix.hpp"

namespace trialg {

/// Linear self-map of an n-dimensional algebra; column j holds the image of e_j.
class LinearEndo {
 public:
  explicit LinearEndo(Matrix matrix);

  static LinearEndo identity(Field field, std::size_t n);
  static LinearEndo zero(Field field, std::size_t n);
  static LinearEndo from_images(Field field, std::size_t n, const std::vector<Vector>& images);
  /// Inverse of `coordinates`: entry (k, l) is read from index l * n + k.
  static LinearEndo from_coordinates(Field field, std::size_t n, const Vector& coords);

  Field field() const noexcept { return matrix_.field(); }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// Column-major flattening: the images of e_0, e_1, ... concatenated.
  Vector coordinates() const;

  Vector operator()(const Vector& x) const { return matrix_.apply(x); }
  Vector image(std::size_t j) const { return matrix_.column(j); }

  /// (*this) o inner
  LinearEndo compose(const LinearEndo& inner) const;
  bool is_identity() const { return matrix_.is_identity(); }
  bool is_zero() const { return matrix_.is_zero(); }

  friend LinearEndo operator+(const LinearEndo& a, const LinearEndo& b);
  friend LinearEndo operator-(const LinearEndo& a, const LinearEndo& b);
  friend LinearEndo operator*(const Scalar& s, const LinearEndo& f);
  friend bool operator==(const LinearEndo&, const LinearEndo&) = default;

 private:
  Matrix matrix_;
};

/// x -> t x
LinearEndo left_multiplication_map(const FDAlgebra& A, const Vector& t);
/// x -> t x - x t
LinearEndo inner_derivation(const FDAlgebra& A, const Vector& t);
/// Two-sided inverse of u in a unital algebra, if it exists.
std::optional<Vector> inverse_element(const FDAlgebra& A, const Vector& u);
/// x -> u x u^{-1}; absent when u is not invertible.
std::optional<LinearEndo> conjugation(const FDAlgebra& A, const Vector& u);

}  // namespace trialg
