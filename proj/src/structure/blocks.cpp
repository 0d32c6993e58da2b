#include "trialg/structure/blocks.hpp"

namespace trialg {

Matrix block_matrix(const TriangularAlgebra& T, const LinearEndo& phi, Block from, Block to) {
  const std::size_t n = T.block_dim(from);
  std::vector<Vector> cols;
  cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    cols.push_back(T.project(to, phi.image(T.block_offset(from) + k)));
  }
  return Matrix::from_columns(T.field(), T.block_dim(to), cols);
}

LinearEndo block_endo(const TriangularAlgebra& T, const LinearEndo& phi, Block b) {
  return LinearEndo(block_matrix(T, phi, b, b));
}

LinearEndo assemble_map(const TriangularAlgebra& T,
                        const std::function<Vector(Block, std::size_t)>& image) {
  std::vector<Vector> images;
  images.reserve(T.dim());
  for (Block b : {Block::A, Block::M, Block::B})
    for (std::size_t k = 0; k < T.block_dim(b); ++k) images.push_back(image(b, k));
  return LinearEndo::from_images(T.field(), T.dim(), images);
}

std::optional<std::size_t> first_difference(const LinearEndo& a, const LinearEndo& b) {
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (a.image(j) != b.image(j)) return j;
  return std::nullopt;
}

}  // namespace trialg
