#pragma once

// Subspaces in canonical reduced row-echelon form, and the kernel/solve engine.

#include <cstddef>
#include <optional>
#include <vector>

#include "trialg/exactlin/matrix.hpp"

namespace trialg {

/// Incrementally maintained reduced row-echelon basis of a row space.
///
/// Every stored row has a leading 1 at its pivot column and zeros at all other
/// pivot columns, so the state after any sequence of insertions is the unique
/// RREF of the inserted rows.
class RowReducer {
 public:
  RowReducer(Field field, std::size_t cols);

  /// Reduces `v` against the current rows in place; the result vanishes at
  /// every pivot column.
  void reduce(Vector& v) const;
  /// Returns true when the row enlarged the span.
  bool insert(Vector v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  Field field_;
  std::size_t cols_;
  std::vector<Vector> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);  // zero subspace

  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace from_reducer(const RowReducer& reducer);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its reduction against the basis; zero exactly when v lies in the span.
  Vector residual(const Vector& v) const;
  bool contains(const Vector& v) const;

  /// Rows are the non-pivot coordinates of `residual`; the kernel of the
  /// returned (ambient - dim) x ambient matrix is exactly this subspace.
  Matrix complement_projection() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
Subspace kernel_basis(const Matrix& m);
Subspace kernel_basis(const RowReducer& reduced_rows);
/// One solution of m x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);

bool subspace_contains(const Subspace& s, const Vector& v);
bool subspace_leq(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);
Subspace subspace_sum(const Subspace& s, const Subspace& t);

}  // namespace trialg
