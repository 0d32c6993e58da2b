#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trialg/algebra/fd_algebra.hpp"

namespace trialg {

/// left[i][k] = coordinates of e_i^A . m_k
using LeftAction = std::vector<std::vector<Vector>>;
/// right[k][j] = coordinates of m_k . e_j^B
using RightAction = std::vector<std::vector<Vector>>;

/// Finite-dimensional (A, B)-bimodule given by action tables.
class Bimodule {
 public:
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t dim_left() const noexcept { return left_.size(); }
  std::size_t dim_right() const noexcept { return right_.empty() ? 0 : right_[0].size(); }

  const Vector& left_basis_action(std::size_t i, std::size_t k) const { return left_[i][k]; }
  const Vector& right_basis_action(std::size_t k, std::size_t j) const { return right_[k][j]; }

  /// a . m with a in A-coordinates.
  Vector left_act(const Vector& a, const Vector& m) const;
  /// m . b with b in B-coordinates.
  Vector right_act(const Vector& m, const Vector& b) const;

  Vector zero() const { return zero_vector(field_, dim()); }
  Vector basis_element(std::size_t k) const { return unit_vector(field_, dim(), k); }

 private:
  friend Bimodule make_bimodule(const FDAlgebra&, const FDAlgebra&, std::vector<std::string>,
                                LeftAction, RightAction);
  Bimodule() = default;

  Field field_ = Field::rational();
  std::vector<std::string> labels_;
  LeftAction left_;
  RightAction right_;
};

/// Validates the module axioms over A and B, compatibility (a m) b = a (m b)
/// and unit actions. Throws ZeroModule or BimoduleViolation.
Bimodule make_bimodule(const FDAlgebra& A, const FDAlgebra& B, std::vector<std::string> labels,
                       LeftAction left, RightAction right);

/// A viewed as an (A, A)-bimodule through its own multiplication.
Bimodule regular_bimodule(const FDAlgebra& A);

}  // namespace trialg
