#pragma once

#include <functional>
#include <optional>

#include "trialg/algebra/triangular.hpp"
#include "trialg/exactlin/matrix.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

/// Matrix of pi_to o phi o iota_from, of shape block_dim(to) x block_dim(from).
Matrix block_matrix(const TriangularAlgebra& T, const LinearEndo& phi, Block from, Block to);
/// Square diagonal block pi_b o phi o iota_b as an endomorphism.
LinearEndo block_endo(const TriangularAlgebra& T, const LinearEndo& phi, Block b);

/// Map on T assembled from the images (in T-coordinates) of each block basis element.
LinearEndo assemble_map(const TriangularAlgebra& T,
                        const std::function<Vector(Block, std::size_t)>& image);

/// First basis index (in T-coordinates) where two maps differ, if any.
std::optional<std::size_t> first_difference(const LinearEndo& a, const LinearEndo& b);

}  // namespace trialg
