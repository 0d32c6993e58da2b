#include "internal.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {

LinearEndo compose_left_multiplier(const TriangularAlgebra& T, const MultParts& p) {
  const auto& M = T.M();
  const Vector fa_one = p.F_a(T.A().one());
  return assemble_map(T, [&](Block b, std::size_t k) {
    switch (b) {
      case Block::A: return T.embed(p.F_a.image(k), M.zero(), T.B().zero());
      case Block::M:
        return T.embed(T.A().zero(), M.left_act(fa_one, M.basis_element(k)), T.B().zero());
      case Block::B:
        return T.embed(T.A().zero(), M.right_act(p.m_F, T.B().basis_element(k)), p.F_b.image(k));
    }
    return T.algebra().zero();
  });
}

MultParts decompose_left_multiplier(const TriangularAlgebra& T, const LinearEndo& F) {
  if (!is_left_multiplier(T.algebra(), F)) {
    throw InvalidParameter("map is not a left multiplier of T");
  }
  MultParts parts{block_endo(T, F, Block::A), block_endo(T, F, Block::B),
                  T.project(Block::M, F(T.q()))};
  if (auto w = is_left_multiplier(T.A(), parts.F_a); !w) {
    throw ReconstructionMismatch("F_A is not a left multiplier", w.witness->pair->first);
  }
  if (auto w = is_left_multiplier(T.B(), parts.F_b); !w) {
    throw ReconstructionMismatch("F_B is not a left multiplier",
                                 T.block_offset(Block::B) + w.witness->pair->first);
  }
  detail::require_reconstruction(compose_left_multiplier(T, parts), F,
                                 "left multiplier decomposition");
  return parts;
}

}  // namespace trialg
