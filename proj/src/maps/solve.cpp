#include "trialg/maps/solve.hpp"

#include <array>
#include <stdexcept>

#include "trialg/algebra/center.hpp"
#include "trialg/error.hpp"

namespace trialg {
namespace {

constexpr std::array<std::pair<MapKind, std::string_view>, 8> kKindNames{{
    {MapKind::derivation, "derivation"},
    {MapKind::sigma_derivation, "sigma_derivation"},
    {MapKind::generalized_pair, "generalized_pair"},
    {MapKind::left_multiplier, "left_multiplier"},
    {MapKind::commuting, "commuting"},
    {MapKind::centralizing, "centralizing"},
    {MapKind::skew_commuting, "skew_commuting"},
    {MapKind::skew_centralizing, "skew_centralizing"},
}};

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

void require_automorphism(const FDAlgebra& A, const LinearEndo& sigma) {
  const CheckResult aut = is_automorphism(A, sigma);
  if (!aut) throw NotAutomorphism(aut.witness->reason);
}

Matrix accepted_complement(const FDAlgebra& A, BracketMode mode) {
  if (mode == BracketMode::centralizing || mode == BracketMode::skew_centralizing) {
    return center_of(A).complement_projection();
  }
  return Matrix::identity(A.field(), A.dim());
}

// Assembles the constraint matrix column by column from elementary probes.
Matrix probe_matrix(Field field, std::size_t dim, std::size_t map_count,
                    const std::function<Vector(const std::vector<LinearEndo>&)>& residual) {
  const std::size_t per_map = dim * dim;
  std::vector<LinearEndo> maps(map_count, LinearEndo::zero(field, dim));
  std::vector<Vector> columns;
  columns.reserve(map_count * per_map);
  for (std::size_t t = 0; t < map_count; ++t)
    for (std::size_t u = 0; u < per_map; ++u) {
      maps[t] = LinearEndo::from_coordinates(field, dim, unit_vector(field, per_map, u));
      columns.push_back(residual(maps));
      maps[t] = LinearEndo::zero(field, dim);
    }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  return Matrix::from_columns(field, rows, columns);
}

}  // namespace

std::string to_string(MapKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return std::string(name);
  throw std::logic_error("unknown map kind");
}

std::optional<MapKind> parse_map_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

std::optional<BracketMode> bracket_mode(MapKind kind) {
  switch (kind) {
    case MapKind::commuting: return BracketMode::commuting;
    case MapKind::centralizing: return BracketMode::centralizing;
    case MapKind::skew_commuting: return BracketMode::skew_commuting;
    case MapKind::skew_centralizing: return BracketMode::skew_centralizing;
    default: return std::nullopt;
  }
}

LinearEndo MapSpace::endo(std::size_t r) const {
  if (is_pair) throw std::logic_error("endo() on a pair space");
  return LinearEndo::from_coordinates(space.field(), algebra_dim, space.basis().at(r));
}

std::pair<LinearEndo, LinearEndo> MapSpace::pair(std::size_t r) const {
  if (!is_pair) throw std::logic_error("pair() on a single-map space");
  const Vector& v = space.basis().at(r);
  const std::size_t n2 = algebra_dim * algebra_dim;
  return {LinearEndo::from_coordinates(space.field(), algebra_dim, slice(v, 0, n2)),
          LinearEndo::from_coordinates(space.field(), algebra_dim, slice(v, n2, n2))};
}

Subspace MapSpace::first_component_space() const {
  if (!is_pair) return space;
  const std::size_t n2 = algebra_dim * algebra_dim;
  std::vector<Vector> firsts;
  for (const auto& v : space.basis()) firsts.push_back(slice(v, 0, n2));
  return Subspace::span(space.field(), n2, firsts);
}

bool MapSpace::contains(const LinearEndo& theta) const {
  if (is_pair) throw std::logic_error("single-map membership on a pair space");
  return space.contains(theta.coordinates());
}

bool MapSpace::contains(const LinearEndo& D, const LinearEndo& d) const {
  if (!is_pair) throw std::logic_error("pair membership on a single-map space");
  return space.contains(concat(D.coordinates(), d.coordinates()));
}

Subspace solve_homogeneous(Field field, std::size_t dim, std::size_t map_count,
                           const Residual& residual) {
  const Matrix m = probe_matrix(field, dim, map_count, residual);
  RowReducer reducer(field, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    if (!is_zero(row)) reducer.insert(std::move(row));
  }
  return kernel_basis(reducer);
}

namespace residuals {

Vector sigma_leibniz(const FDAlgebra& A, const LinearEndo& d, const LinearEndo& sigma) {
  Vector out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      append(out, d(A.basis_product(i, j)) - A.mul(d.image(i), A.basis_element(j)) -
                      A.mul(sigma.image(i), d.image(j)));
    }
  return out;
}

Vector generalized_leibniz(const FDAlgebra& A, const LinearEndo& D, const LinearEndo& d,
                           const LinearEndo& sigma) {
  Vector out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      append(out, D(A.basis_product(i, j)) - A.mul(D.image(i), A.basis_element(j)) -
                      A.mul(sigma.image(i), d.image(j)));
    }
  return out;
}

Vector left_multiplier(const FDAlgebra& A, const LinearEndo& F) {
  Vector out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      append(out, F(A.basis_product(i, j)) - A.mul(F.image(i), A.basis_element(j)));
    }
  return out;
}

Vector bracket(const FDAlgebra& A, const LinearEndo& theta, const LinearEndo& sigma,
               BracketMode mode, const Matrix& complement) {
  const bool skew = mode == BracketMode::skew_commuting || mode == BracketMode::skew_centralizing;
  auto form = [&](std::size_t i, std::size_t j) {
    const Vector sx = sigma.image(i);
    const Vector ty = theta.image(j);
    const Vector ei = A.basis_element(i);
    return skew ? A.mul(sx, ty) + A.mul(ty, ei) : A.mul(sx, ty) - A.mul(ty, ei);
  };
  Vector out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i; j < A.dim(); ++j) {
      Vector term = form(i, j);
      if (i != j) term = term + form(j, i);
      append(out, complement.apply(term));
    }
  return out;
}

}  // namespace residuals

MapSpace solve_space(const FDAlgebra& A, const LinearEndo& sigma, MapKind kind) {
  const Field field = A.field();
  const std::size_t n = A.dim();
  if (kind == MapKind::derivation) {
    const LinearEndo id = LinearEndo::identity(field, n);
    Subspace s = solve_homogeneous(field, n, 1, [&](const std::vector<LinearEndo>& m) {
      return residuals::sigma_leibniz(A, m[0], id);
    });
    return {kind, n, false, std::move(s)};
  }
  require_automorphism(A, sigma);

  switch (kind) {
    case MapKind::sigma_derivation: {
      Subspace s = solve_homogeneous(field, n, 1, [&](const std::vector<LinearEndo>& m) {
        return residuals::sigma_leibniz(A, m[0], sigma);
      });
      return {kind, n, false, std::move(s)};
    }
    case MapKind::generalized_pair: {
      Subspace s = solve_homogeneous(field, n, 2, [&](const std::vector<LinearEndo>& m) {
        Vector r = residuals::generalized_leibniz(A, m[0], m[1], sigma);
        append(r, residuals::sigma_leibniz(A, m[1], sigma));
        return r;
      });
      return {kind, n, true, std::move(s)};
    }
    case MapKind::left_multiplier: {
      Subspace s = solve_homogeneous(field, n, 1, [&](const std::vector<LinearEndo>& m) {
        return residuals::left_multiplier(A, m[0]);
      });
      return {kind, n, false, std::move(s)};
    }
    default: break;
  }

  const BracketMode mode = *bracket_mode(kind);
  const Matrix complement = accepted_complement(A, mode);
  Subspace s = solve_homogeneous(field, n, 1, [&](const std::vector<LinearEndo>& m) {
    return residuals::bracket(A, m[0], sigma, mode, complement);
  });
  return {kind, n, false, std::move(s)};
}

MapSpace solve_centralizing_generalized_pairs(const FDAlgebra& A) {
  const Field field = A.field();
  const std::size_t n = A.dim();
  const LinearEndo id = LinearEndo::identity(field, n);
  const Matrix complement = center_of(A).complement_projection();
  Subspace s = solve_homogeneous(field, n, 2, [&](const std::vector<LinearEndo>& m) {
    Vector r = residuals::generalized_leibniz(A, m[0], m[1], id);
    append(r, residuals::sigma_leibniz(A, m[1], id));
    append(r, residuals::bracket(A, m[0], id, BracketMode::centralizing, complement));
    return r;
  });
  return {MapKind::generalized_pair, n, true, std::move(s)};
}

std::optional<LinearEndo> find_associated_derivation(const FDAlgebra& A, const LinearEndo& D,
                                                     const LinearEndo& sigma) {
  const Field field = A.field();
  const std::size_t n = A.dim();
  // sigma(e_i) d(e_j) = D(e_i e_j) - D(e_i) e_j, together with the twisted
  // Leibniz rule for d.
  const Matrix m = probe_matrix(field, n, 1, [&](const std::vector<LinearEndo>& maps) {
    Vector r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) append(r, A.mul(sigma.image(i), maps[0].image(j)));
    append(r, residuals::sigma_leibniz(A, maps[0], sigma));
    return r;
  });
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      append(rhs, D(A.basis_product(i, j)) - A.mul(D.image(i), A.basis_element(j)));
  append(rhs, zero_vector(field, n * n * n));
  auto solution = solve_linear(m, rhs);
  if (!solution) return std::nullopt;
  return LinearEndo::from_coordinates(field, n, *solution);
}

}  // namespace trialg
