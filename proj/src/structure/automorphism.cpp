#include "internal.hpp"
#include "trialg/maps/predicates.hpp"

namespace trialg {

namespace detail {

LinearEndo build_automorphism(const TriangularAlgebra& T, const AutParts& parts) {
  const auto& M = T.M();
  return assemble_map(T, [&](Block b, std::size_t k) {
    switch (b) {
      case Block::A: {
        const Vector fa = parts.f.image(k);
        return T.embed(fa, M.left_act(fa, parts.m_sigma), T.B().zero());
      }
      case Block::M: return T.embed(T.A().zero(), parts.nu.image(k), T.B().zero());
      case Block::B: {
        const Vector gb = parts.g.image(k);
        return T.embed(T.A().zero(), -M.right_act(parts.m_sigma, gb), gb);
      }
    }
    return T.algebra().zero();
  });
}

}  // namespace detail

namespace {

AutParts identity_parts(const TriangularAlgebra& T) {
  const Field F = T.field();
  return {LinearEndo::identity(F, T.A().dim()), LinearEndo::identity(F, T.B().dim()), T.M().zero(),
          LinearEndo::identity(F, T.M().dim())};
}

// nu(a m) = f(a) nu(m) and nu(m b) = nu(m) g(b) on basis elements; returns the
// offending M-basis index.
std::optional<std::size_t> nu_intertwining_failure(const TriangularAlgebra& T,
                                                   const AutParts& parts) {
  const auto& M = T.M();
  for (std::size_t k = 0; k < M.dim(); ++k) {
    const Vector nk = parts.nu.image(k);
    for (std::size_t i = 0; i < T.A().dim(); ++i) {
      if (parts.nu(M.left_basis_action(i, k)) != M.left_act(parts.f.image(i), nk)) return k;
    }
    for (std::size_t j = 0; j < T.B().dim(); ++j) {
      if (parts.nu(M.right_basis_action(k, j)) != M.right_act(nk, parts.g.image(j))) return k;
    }
  }
  return std::nullopt;
}

}  // namespace

AutParts decompose_automorphism(const TriangularAlgebra& T, const LinearEndo& sigma) {
  const CheckResult aut = is_automorphism(T.algebra(), sigma);
  if (!aut) throw NotAutomorphism(aut.witness->reason);
  if (sigma.is_identity()) return identity_parts(T);
  detail::require_flags(T, "automorphism decomposition");

  AutParts parts{block_endo(T, sigma, Block::A), block_endo(T, sigma, Block::B),
                 T.project(Block::M, sigma(T.p())), block_endo(T, sigma, Block::M)};
  const std::size_t off_m = T.block_offset(Block::M);
  if (!is_automorphism(T.A(), parts.f)) throw ReconstructionMismatch("f is not an automorphism of A", 0);
  if (!is_automorphism(T.B(), parts.g)) {
    throw ReconstructionMismatch("g is not an automorphism of B", T.block_offset(Block::B));
  }
  if (parts.nu.matrix().rank() != T.M().dim()) {
    throw ReconstructionMismatch("nu is not bijective", off_m);
  }
  if (auto k = nu_intertwining_failure(T, parts)) {
    throw ReconstructionMismatch("nu does not intertwine f and g", off_m + *k);
  }
  detail::require_reconstruction(detail::build_automorphism(T, parts), sigma,
                                 "automorphism decomposition");
  return parts;
}

LinearEndo compose_automorphism(const TriangularAlgebra& T, const AutParts& parts) {
  if (parts.f.dim() != T.A().dim() || parts.g.dim() != T.B().dim() ||
      parts.nu.dim() != T.M().dim() || parts.m_sigma.size() != T.M().dim()) {
    throw InvalidParts("automorphism parts have the wrong shapes");
  }
  if (parts.nu.matrix().rank() != T.M().dim()) throw InvalidParts("nu is not bijective");
  LinearEndo sigma = detail::build_automorphism(T, parts);
  const CheckResult aut = is_automorphism(T.algebra(), sigma);
  if (!aut) throw InvalidParts("parts do not define an automorphism: " + aut.witness->reason);
  return sigma;
}

}  // namespace trialg
