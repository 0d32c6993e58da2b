#include "trialg/algebra/bimodule.hpp"

#include <stdexcept>

#include "trialg/error.hpp"

namespace trialg {

Vector Bimodule::left_act(const Vector& a, const Vector& m) const {
  if (a.size() != left_.size() || m.size() != dim()) {
    throw std::invalid_argument("left action dimension mismatch");
  }
  Vector out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].is_zero()) continue;
      Scalar c = a[i] * m[k];
      axpy(c, left_[i][k], out);
    }
  }
  return out;
}

Vector Bimodule::right_act(const Vector& m, const Vector& b) const {
  if (m.size() != dim() || b.size() != dim_right()) {
    throw std::invalid_argument("right action dimension mismatch");
  }
  Vector out = zero();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = m[k] * b[j];
      axpy(c, right_[k][j], out);
    }
  }
  return out;
}

Bimodule make_bimodule(const FDAlgebra& A, const FDAlgebra& B, std::vector<std::string> labels,
                       LeftAction left, RightAction right) {
  const std::size_t dm = labels.size();
  if (dm == 0) throw ZeroModule();
  if (A.field() != B.field()) throw InvalidParameter("A and B over different fields");
  if (left.size() != A.dim()) throw InvalidParameter("left action table must be dimA x dimM");
  for (const auto& row : left) {
    if (row.size() != dm) throw InvalidParameter("left action table must be dimA x dimM");
    for (const auto& v : row)
      if (v.size() != dm) throw InvalidParameter("left action vector has wrong length");
  }
  if (right.size() != dm) throw InvalidParameter("right action table must be dimM x dimB");
  for (const auto& row : right) {
    if (row.size() != B.dim()) throw InvalidParameter("right action table must be dimM x dimB");
    for (const auto& v : row)
      if (v.size() != dm) throw InvalidParameter("right action vector has wrong length");
  }

  Bimodule M;
  M.field_ = A.field();
  M.labels_ = std::move(labels);
  M.left_ = std::move(left);
  M.right_ = std::move(right);

  auto fail = [](const std::string& what) { throw BimoduleViolation(what); };
  for (std::size_t k = 0; k < dm; ++k) {
    const Vector m = M.basis_element(k);
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        Vector lhs = M.left_act(A.basis_product(i, j), m);
        Vector rhs = M.left_act(A.basis_element(i), M.left_act(A.basis_element(j), m));
        if (lhs != rhs) {
          fail("left module axiom fails for A-basis " + std::to_string(i) + ", " +
               std::to_string(j) + " on m" + std::to_string(k));
        }
      }
    for (std::size_t i = 0; i < B.dim(); ++i)
      for (std::size_t j = 0; j < B.dim(); ++j) {
        Vector lhs = M.right_act(m, B.basis_product(i, j));
        Vector rhs = M.right_act(M.right_act(m, B.basis_element(i)), B.basis_element(j));
        if (lhs != rhs) {
          fail("right module axiom fails for B-basis " + std::to_string(i) + ", " +
               std::to_string(j) + " on m" + std::to_string(k));
        }
      }
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < B.dim(); ++j) {
        Vector lhs = M.right_act(M.left_act(A.basis_element(i), m), B.basis_element(j));
        Vector rhs = M.left_act(A.basis_element(i), M.right_act(m, B.basis_element(j)));
        if (lhs != rhs) {
          fail("bimodule compatibility fails for a" + std::to_string(i) + ", m" +
               std::to_string(k) + ", b" + std::to_string(j));
        }
      }
    if (A.is_unital() && M.left_act(A.one(), m) != m) {
      fail("unit of A does not fix m" + std::to_string(k));
    }
    if (B.is_unital() && M.right_act(m, B.one()) != m) {
      fail("unit of B does not fix m" + std::to_string(k));
    }
  }
  return M;
}

Bimodule regular_bimodule(const FDAlgebra& A) {
  const std::size_t n = A.dim();
  LeftAction left(n, std::vector<Vector>(n));
  RightAction right(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      left[i][k] = A.basis_product(i, k);
      right[i][k] = A.basis_product(i, k);
    }
  return make_bimodule(A, A, A.labels(), std::move(left), std::move(right));
}

}  // namespace trialg
