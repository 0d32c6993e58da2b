#include "internal.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {
namespace {

LinearEndo build(const TriangularAlgebra& T, const AutParts& s, const GenParts& p,
                 bool display_variant) {
  const auto& M = T.M();
  const Vector da_one = p.D_a(T.A().one());
  return assemble_map(T, [&](Block b, std::size_t k) {
    switch (b) {
      case Block::A:
        return T.embed(p.D_a.image(k), M.left_act(s.f.image(k), p.m_d), T.B().zero());
      case Block::M: {
        const Vector mk = M.basis_element(k);
        return T.embed(T.A().zero(), p.xi.image(k) + M.left_act(da_one, mk), T.B().zero());
      }
      case Block::B: {
        const Vector Db = p.D_b.image(k);
        const Vector twisted = display_variant ? Db : p.d_parts.d_b.image(k);
        return T.embed(T.A().zero(),
                       M.right_act(p.m_D, T.B().basis_element(k)) - M.right_act(s.m_sigma, twisted),
                       Db);
      }
    }
    return T.algebra().zero();
  });
}

}  // namespace

LinearEndo compose_generalized(const TriangularAlgebra& T, const AutParts& s, const GenParts& p) {
  return build(T, s, p, false);
}

LinearEndo compose_generalized_display(const TriangularAlgebra& T, const AutParts& s,
                                       const GenParts& p) {
  return build(T, s, p, true);
}

GenParts decompose_generalized(const TriangularAlgebra& T, const LinearEndo& sigma,
                               const LinearEndo& D, const LinearEndo& d) {
  const AutParts s = decompose_automorphism(T, sigma);
  if (!is_generalized_pair(T.algebra(), D, d, sigma)) {
    throw InvalidParameter("(D, d) is not a generalized sigma-derivation pair of T");
  }
  DerParts dp = decompose_sigma_derivation(T, sigma, d);
  GenParts parts{block_endo(T, D, Block::A),
                 block_endo(T, D, Block::B),
                 dp.m_d,
                 T.project(Block::M, D(T.q())),
                 dp.xi,
                 dp,
                 false};
  if (auto w = is_generalized_pair(T.A(), parts.D_a, dp.d_a, s.f); !w) {
    throw ReconstructionMismatch("D_A is not a generalized f-derivation", w.witness->pair->first);
  }
  if (auto w = is_generalized_pair(T.B(), parts.D_b, dp.d_b, s.g); !w) {
    throw ReconstructionMismatch("D_B is not a generalized g-derivation",
                                 T.block_offset(Block::B) + w.witness->pair->first);
  }
  detail::require_reconstruction(compose_generalized(T, s, parts), D,
                                 "generalized derivation decomposition");
  parts.display_variant_agrees = compose_generalized_display(T, s, parts) == D;
  return parts;
}

}  // namespace trialg
