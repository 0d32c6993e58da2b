#include "trialg/exactlin/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace trialg {
namespace {

void require_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("subspace ambient dimension mismatch");
}

}  // namespace

RowReducer::RowReducer(Field field, std::size_t cols) : field_(field), cols_(cols) {}

void RowReducer::reduce(Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    if (v[pc].is_zero()) continue;
    const Scalar factor = v[pc];
    const Vector& row = rows_[r];
    for (std::size_t c = pc; c < cols_; ++c) {
      if (!row[c].is_zero()) v[c].sub_product(factor, row[c]);
    }
  }
}

bool RowReducer::insert(Vector v) {
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == v.end()) return false;
  const auto pc = static_cast<std::size_t>(lead - v.begin());
  const Scalar inv = lead->inverse();
  for (std::size_t c = pc; c < cols_; ++c) {
    if (!v[c].is_zero()) v[c] *= inv;
  }
  for (auto& row : rows_) {
    if (row[pc].is_zero()) continue;
    const Scalar factor = row[pc];
    for (std::size_t c = pc; c < cols_; ++c) {
      if (!v[c].is_zero()) row[c].sub_product(factor, v[c]);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pc);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(field, ambient_dim, i));
  return span(field, ambient_dim, units);
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  RowReducer reducer(field, ambient_dim);
  for (const auto& v : vectors) reducer.insert(v);
  return from_reducer(reducer);
}

Subspace Subspace::from_reducer(const RowReducer& reducer) {
  Subspace s(reducer.field(), reducer.cols());
  s.basis_ = reducer.rows();
  s.pivots_ = reducer.pivots();
  return s;
}

Vector Subspace::residual(const Vector& v) const {
  require_ambient(v.size(), ambient_);
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    if (r[pc].is_zero()) continue;
    const Scalar factor = r[pc];
    axpy(-factor, basis_[k], r);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

Matrix Subspace::complement_projection() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto pc : pivots_) is_pivot[pc] = true;
  Matrix proj(field_, ambient_ - basis_.size(), ambient_);
  std::size_t out = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (is_pivot[j]) continue;
    proj(out, j) = field_.one();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar& coeff = basis_[k][j];
      if (!coeff.is_zero()) proj(out, pivots_[k]) -= coeff;
    }
    ++out;
  }
  return proj;
}

Subspace kernel_basis(const RowReducer& reduced) {
  const std::size_t n = reduced.cols();
  const Field field = reduced.field();
  std::vector<bool> is_pivot(n, false);
  for (auto pc : reduced.pivots()) is_pivot[pc] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(field, n, f);
    for (std::size_t r = 0; r < reduced.rank(); ++r) {
      v[reduced.pivots()[r]] = -reduced.rows()[r][f];
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(field, n, vectors);
}

Subspace kernel_basis(const Matrix& m) {
  RowReducer reducer(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) reducer.insert(m.row(r));
  return kernel_basis(reducer);
}

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t n = m.cols();
  RowReducer reducer(m.field(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    reducer.insert(std::move(row));
  }
  if (!reducer.pivots().empty() && reducer.pivots().back() == n) return std::nullopt;
  Vector x = zero_vector(m.field(), n);
  for (std::size_t r = 0; r < reducer.rank(); ++r) x[reducer.pivots()[r]] = reducer.rows()[r][n];
  return x;
}

bool subspace_contains(const Subspace& s, const Vector& v) { return s.contains(v); }

bool subspace_leq(const Subspace& s, const Subspace& t) {
  require_ambient(s.ambient_dim(), t.ambient_dim());
  return std::all_of(s.basis().begin(), s.basis().end(),
                     [&](const Vector& v) { return t.contains(v); });
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  require_ambient(s.ambient_dim(), t.ambient_dim());
  RowReducer reducer(s.field(), s.ambient_dim());
  const Matrix ps = s.complement_projection();
  const Matrix pt = t.complement_projection();
  for (std::size_t r = 0; r < ps.rows(); ++r) reducer.insert(ps.row(r));
  for (std::size_t r = 0; r < pt.rows(); ++r) reducer.insert(pt.row(r));
  return kernel_basis(reducer);
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  require_ambient(s.ambient_dim(), t.ambient_dim());
  std::vector<Vector> all = s.basis();
  all.insert(all.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(s.field(), s.ambient_dim(), all);
}

}  // namespace trialg
