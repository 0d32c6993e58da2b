#include "trialg/algebra/fd_algebra.hpp"

#include <stdexcept>

#include "trialg/error.hpp"

namespace trialg {

const Vector& FDAlgebra::one() const {
  if (!unit_) throw std::logic_error("algebra '" + name_ + "' has no unit");
  return *unit_;
}

Vector FDAlgebra::mul(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("element dimension mismatch");
  Vector out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = sparse_[i][j];
      if (terms.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : terms) out[k].add_product(xy, c);
    }
  }
  return out;
}

Matrix FDAlgebra::left_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(x, basis_element(j)));
  return Matrix::from_columns(field_, dim(), cols);
}

Matrix FDAlgebra::right_multiplication(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(basis_element(j), x));
  return Matrix::from_columns(field_, dim(), cols);
}

std::string FDAlgebra::format(const Vector& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size() && i < labels_.size(); ++i) {
    if (x[i].is_zero()) continue;
    std::string coeff = x[i].to_string();
    bool negative = field_.is_rational() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

FDAlgebra make_algebra(Field field, std::vector<std::string> labels,
                       StructureConstants table, std::optional<Vector> unit,
                       bool only_trivial_idempotents, std::string name) {
  const std::size_t n = labels.size();
  if (table.size() != n) throw InvalidParameter("structure table must be dim x dim");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidParameter("structure table must be dim x dim");
    for (const auto& v : row) {
      if (v.size() != n) throw InvalidParameter("structure constant vector has wrong length");
      for (const auto& s : v) {
        if (s.field() != field) throw InvalidParameter("structure constant over wrong field");
      }
    }
  }
  if (unit && unit->size() != n) throw InvalidParameter("unit has wrong length");

  FDAlgebra a;
  a.field_ = field;
  a.name_ = std::move(name);
  a.labels_ = std::move(labels);
  a.table_ = std::move(table);
  a.only_trivial_idempotents_ = only_trivial_idempotents;
  a.sparse_.assign(n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.table_[i][j][k].is_zero()) a.sparse_[i][j].emplace_back(k, a.table_[i][j][k]);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = a.mul(a.table_[i][j], a.basis_element(k));
        Vector right = a.mul(a.basis_element(i), a.table_[j][k]);
        if (left != right) {
          throw AssociativityViolation(i, j, k, to_string(left), to_string(right));
        }
      }

  if (unit) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector e = a.basis_element(i);
      if (a.mul(*unit, e) != e || a.mul(e, *unit) != e) throw UnitViolation(i);
    }
    a.unit_ = std::move(unit);
  }
  return a;
}

}  // namespace trialg
