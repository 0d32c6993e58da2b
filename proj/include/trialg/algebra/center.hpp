#pragma once

#include <optional>

#include "trialg/algebra/fd_algebra.hpp"
#include "trialg/algebra/triangular.hpp"
#include "trialg/exactlin/subspace.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

/// Z(A) as the kernel of x -> x e_i - e_i x over all basis elements.
Subspace center_of(const FDAlgebra& A);
/// Z_sigma(A) = { l : sigma(x) l = l x for all x }, as a kernel.
Subspace sigma_center_of(const FDAlgebra& A, const LinearEndo& sigma);

struct CenterData {
  Subspace center;       // in T-coordinates
  Subspace pi_a_center;  // pi_A(Z(T)) in A-coordinates
  Subspace pi_b_center;  // pi_B(Z(T)) in B-coordinates
  /// Column r is tau of the r-th canonical basis vector of pi_A(Z(T)), in B-coordinates.
  Matrix tau;
};

/// Center of T computed twice, from the commutator kernel and from the
/// block description { (a, 0, b) : a m = m b for all m }. Throws
/// StructuralMismatch if the two disagree.
CenterData center(const TriangularAlgebra& T);

struct SigmaCenterData {
  Subspace sigma_center;  // in T-coordinates
  /// True when the block description was computed and matched.
  bool structural_checked = false;
  /// Column r is eta of the r-th canonical basis vector of pi_B(Z_sigma(T)), in
  /// A-coordinates. Present when structural_checked.
  std::optional<Matrix> eta;
};

/// Z_sigma(T) as a kernel. When A and B carry the trivial-idempotent flag
/// (or sigma is the identity) it is cross-checked against
/// { (a, -m_sigma b, b) : a m = nu_sigma(m) b } with m_sigma = pi_M(sigma(p)) and
/// nu_sigma = pi_M o sigma on M. Throws NotAutomorphism or StructuralMismatch.
SigmaCenterData sigma_center(const TriangularAlgebra& T, const LinearEndo& sigma);

}  // namespace trialg
