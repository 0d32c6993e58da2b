#include "internal.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {

LinearEndo compose_sigma_derivation(const TriangularAlgebra& T, const AutParts& s,
                                    const DerParts& parts) {
  const auto& M = T.M();
  return assemble_map(T, [&](Block b, std::size_t k) {
    switch (b) {
      case Block::A:
        return T.embed(parts.d_a.image(k), M.left_act(s.f.image(k), parts.m_d), T.B().zero());
      case Block::M: return T.embed(T.A().zero(), parts.xi.image(k), T.B().zero());
      case Block::B: {
        const Vector eb = T.B().basis_element(k);
        const Vector db = parts.d_b.image(k);
        return T.embed(T.A().zero(), -M.right_act(parts.m_d, eb) - M.right_act(s.m_sigma, db), db);
      }
    }
    return T.algebra().zero();
  });
}

DerParts decompose_sigma_derivation(const TriangularAlgebra& T, const LinearEndo& sigma,
                                    const LinearEndo& d) {
  const AutParts s = decompose_automorphism(T, sigma);
  if (!is_sigma_derivation(T.algebra(), d, sigma)) {
    throw InvalidParameter("map is not a sigma-derivation of T");
  }
  DerParts parts{block_endo(T, d, Block::A), block_endo(T, d, Block::B),
                 T.project(Block::M, d(T.p())), block_endo(T, d, Block::M)};

  const auto& M = T.M();
  const std::size_t off_m = T.block_offset(Block::M), off_b = T.block_offset(Block::B);
  if (auto w = is_sigma_derivation(T.A(), parts.d_a, s.f); !w) {
    throw ReconstructionMismatch("d_A is not an f-derivation", w.witness->pair->first);
  }
  if (auto w = is_sigma_derivation(T.B(), parts.d_b, s.g); !w) {
    throw ReconstructionMismatch("d_B is not a g-derivation", off_b + w.witness->pair->first);
  }
  for (std::size_t k = 0; k < M.dim(); ++k) {
    const Vector mk = M.basis_element(k);
    for (std::size_t i = 0; i < T.A().dim(); ++i) {
      const Vector lhs = parts.xi(M.left_basis_action(i, k));
      const Vector rhs = M.left_act(parts.d_a.image(i), mk) + M.left_act(s.f.image(i), parts.xi.image(k));
      if (lhs != rhs) throw ReconstructionMismatch("xi(am) rule fails", off_m + k);
    }
    for (std::size_t j = 0; j < T.B().dim(); ++j) {
      const Vector lhs = parts.xi(M.right_basis_action(k, j));
      const Vector rhs = M.right_act(parts.xi.image(k), T.B().basis_element(j)) +
                         M.right_act(s.nu.image(k), parts.d_b.image(j));
      if (lhs != rhs) throw ReconstructionMismatch("xi(mb) rule fails", off_m + k);
    }
  }
  detail::require_reconstruction(compose_sigma_derivation(T, s, parts), d,
                                 "sigma-derivation decomposition");
  return parts;
}

}  // namespace trialg
