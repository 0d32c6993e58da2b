#include "trialg/maps/linear_endo.hpp"

#include <stdexcept>

#include "trialg/exactlin/subspace.hpp"

namespace trialg {

LinearEndo::LinearEndo(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("endomorphism must be square");
}

LinearEndo LinearEndo::identity(Field field, std::size_t n) {
  return LinearEndo(Matrix::identity(field, n));
}

LinearEndo LinearEndo::zero(Field field, std::size_t n) { return LinearEndo(Matrix(field, n, n)); }

LinearEndo LinearEndo::from_images(Field field, std::size_t n, const std::vector<Vector>& images) {
  if (images.size() != n) throw std::invalid_argument("need one image per basis element");
  return LinearEndo(Matrix::from_columns(field, n, images));
}

LinearEndo LinearEndo::from_coordinates(Field field, std::size_t n, const Vector& coords) {
  if (coords.size() != n * n) throw std::invalid_argument("coordinate vector must have n^2 entries");
  Matrix m(field, n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) m(k, l) = coords[l * n + k];
  return LinearEndo(std::move(m));
}

Vector LinearEndo::coordinates() const {
  const std::size_t n = dim();
  Vector v;
  v.reserve(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) v.push_back(matrix_(k, l));
  return v;
}

LinearEndo LinearEndo::compose(const LinearEndo& inner) const {
  return LinearEndo(matrix_ * inner.matrix_);
}

LinearEndo operator+(const LinearEndo& a, const LinearEndo& b) {
  return LinearEndo(a.matrix_ + b.matrix_);
}

LinearEndo operator-(const LinearEndo& a, const LinearEndo& b) {
  return LinearEndo(a.matrix_ - b.matrix_);
}

LinearEndo operator*(const Scalar& s, const LinearEndo& f) { return LinearEndo(s * f.matrix_); }

LinearEndo left_multiplication_map(const FDAlgebra& A, const Vector& t) {
  return LinearEndo(A.left_multiplication(t));
}

LinearEndo inner_derivation(const FDAlgebra& A, const Vector& t) {
  return LinearEndo(A.left_multiplication(t) - A.right_multiplication(t));
}

std::optional<Vector> inverse_element(const FDAlgebra& A, const Vector& u) {
  if (!A.is_unital()) return std::nullopt;
  // In a finite-dimensional unital algebra a one-sided inverse is two-sided.
  auto v = solve_linear(A.left_multiplication(u), A.one());
  if (!v || A.mul(*v, u) != A.one()) return std::nullopt;
  return v;
}

std::optional<LinearEndo> conjugation(const FDAlgebra& A, const Vector& u) {
  auto inv = inverse_element(A, u);
  if (!inv) return std::nullopt;
  return LinearEndo(A.left_multiplication(u) * A.right_multiplication(*inv));
}

}  // namespace trialg
