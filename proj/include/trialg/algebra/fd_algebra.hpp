#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trialg/exactlin/matrix.hpp"

namespace trialg {

/// c[i][j] = coordinates of e_i * e_j.
using StructureConstants = std::vector<std::vector<Vector>>;

/// Finite-dimensional associative algebra over a field, given by structure
/// constants on a labelled basis. Immutable after construction.
class FDAlgebra {
 public:
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vector& basis_product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  bool is_unital() const noexcept { return unit_.has_value(); }
  /// Throws std::logic_error for non-unital algebras.
  const Vector& one() const;
  /// Declared at construction; see has_only_trivial_idempotents_bruteforce.
  bool only_trivial_idempotents() const noexcept { return only_trivial_idempotents_; }

  Vector zero() const { return zero_vector(field_, dim()); }
  Vector basis_element(std::size_t i) const { return unit_vector(field_, dim(), i); }

  Vector mul(const Vector& x, const Vector& y) const;
  /// Matrix of y -> x y.
  Matrix left_multiplication(const Vector& x) const;
  /// Matrix of y -> y x.
  Matrix right_multiplication(const Vector& x) const;

  /// Human-readable element, e.g. "2*e12 - e23".
  std::string format(const Vector& x) const;

 private:
  friend FDAlgebra make_algebra(Field, std::vector<std::string>, StructureConstants,
                                std::optional<Vector>, bool, std::string);
  FDAlgebra() = default;

  Field field_ = Field::rational();
  std::string name_;
  std::vector<std::string> labels_;
  StructureConstants table_;
  // sparse_[i][j] lists the nonzero coordinates of e_i e_j.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> sparse_;
  std::optional<Vector> unit_;
  bool only_trivial_idempotents_ = false;
};

/// Validates the table and builds the algebra.
///
/// Throws InvalidParameter for malformed shapes, AssociativityViolation for the
/// first failing basis triple (i, j, k) in lexicographic order and
/// UnitViolation when the declared unit is not a two-sided identity.
FDAlgebra make_algebra(Field field, std::vector<std::string> labels,
                       StructureConstants structure_constants,
                       std::optional<Vector> unit = std::nullopt,
                       bool only_trivial_idempotents = false, std::string name = {});

}  // namespace trialg
