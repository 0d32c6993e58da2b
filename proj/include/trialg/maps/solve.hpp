#pragma once

// Spaces of structured linear maps as kernels of compiled linear systems.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trialg/algebra/fd_algebra.hpp"
#include "trialg/exactlin/subspace.hpp"
#include "trialg/maps/linear_endo.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {

enum class MapKind {
  derivation,
  sigma_derivation,
  generalized_pair,
  left_multiplier,
  commuting,
  centralizing,
  skew_commuting,
  skew_centralizing,
};

std::string to_string(MapKind kind);
std::optional<MapKind> parse_map_kind(std::string_view name);
/// The bracket mode of a commuting-type kind; nullopt for the others.
std::optional<BracketMode> bracket_mode(MapKind kind);

/// A solved space of maps. Coordinates follow LinearEndo::coordinates
/// (column-major); pair spaces concatenate the coordinates of (D, d).
struct MapSpace {
  MapKind kind;
  std::size_t algebra_dim;
  bool is_pair;
  Subspace space;

  std::size_t dim() const noexcept { return space.dim(); }
  /// r-th canonical basis element; only for single-map spaces.
  LinearEndo endo(std::size_t r) const;
  /// r-th canonical basis element (D, d); only for pair spaces.
  std::pair<LinearEndo, LinearEndo> pair(std::size_t r) const;
  /// Projection onto the first map's coordinates (the D-space for pairs).
  Subspace first_component_space() const;

  bool contains(const LinearEndo& theta) const;
  bool contains(const LinearEndo& D, const LinearEndo& d) const;
};

/// Linear residual of a tuple of unknown maps; it vanishes exactly on solutions.
using Residual = std::function<Vector(const std::vector<LinearEndo>&)>;

/// Kernel of `residual` over tuples of `map_count` endomorphisms of a
/// `dim`-dimensional space. The residual is evaluated on elementary maps to
/// assemble the constraint matrix, so it must be linear.
Subspace solve_homogeneous(Field field, std::size_t dim, std::size_t map_count,
                           const Residual& residual);

/// Residual pieces used by solve_space, exposed for combined systems.
namespace residuals {
Vector sigma_leibniz(const FDAlgebra& A, const LinearEndo& d, const LinearEndo& sigma);
Vector generalized_leibniz(const FDAlgebra& A, const LinearEndo& D, const LinearEndo& d,
                           const LinearEndo& sigma);
Vector left_multiplier(const FDAlgebra& A, const LinearEndo& F);
/// Polarized bracket system; `complement` annihilates the accepted subspace.
Vector bracket(const FDAlgebra& A, const LinearEndo& theta, const LinearEndo& sigma,
               BracketMode mode, const Matrix& complement);
}  // namespace residuals

/// Throws NotAutomorphism unless sigma is an automorphism of A. The
/// derivation kind ignores sigma.
MapSpace solve_space(const FDAlgebra& A, const LinearEndo& sigma, MapKind kind);

/// Generalized pairs (D, d) with sigma = Id whose D is centralizing.
MapSpace solve_centralizing_generalized_pairs(const FDAlgebra& A);

/// Some d with (D, d) a generalized sigma-pair, if one exists.
std::optional<LinearEndo> find_associated_derivation(const FDAlgebra& A, const LinearEndo& D,
                                                     const LinearEndo& sigma);

}  // namespace trialg
