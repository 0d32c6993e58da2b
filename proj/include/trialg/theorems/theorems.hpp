#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trialg/algebra/fd_algebra.hpp"
#include "trialg/algebra/triangular.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::string field;
  std::string sigma;
  std::map<std::string, std::size_t> dimensions;
  bool passed = false;
  /// A map violating the conclusion; present exactly when !passed.
  std::optional<LinearEndo> witness;
  std::string note;
};

/// sigma-derivations that are sigma-centralizing must vanish. A non-identity
/// sigma needs the trivial-idempotent flags (HypothesisNotMet otherwise).
TheoremReport verify_posner(const TriangularAlgebra& T, const LinearEndo& sigma,
                            const std::string& sigma_name = "identity");
/// Seeded sample of non-identity automorphisms, each of which must fail to be
/// centralizing; the identity must be commuting. Needs the flags.
TheoremReport verify_mayne(const TriangularAlgebra& T, std::size_t samples, std::uint64_t seed);
/// The only sigma-skew-commuting map is zero.
TheoremReport verify_skew_zero(const TriangularAlgebra& T, const LinearEndo& sigma,
                               const std::string& sigma_name = "identity");
/// Skew-centralizing maps are commuting. Needs a left identity.
TheoremReport verify_sharma_dhara(const FDAlgebra& A);
/// Centralizing generalized derivations are left multipliers with zero
/// associated derivation.
TheoremReport verify_gd_left_mult(const TriangularAlgebra& T);

/// Some e with e x = x for all x, if one exists.
std::optional<Vector> find_left_identity(const FDAlgebra& A);

/// Non-identity automorphisms alternating between recomposed parts (inner
/// f, g, random m_sigma, scaled intertwiner nu) and conjugation by random
/// invertible elements of T. Deterministic in `seed`.
std::vector<LinearEndo> sample_automorphisms(const TriangularAlgebra& T, std::size_t count,
                                             std::uint64_t seed);

}  // namespace trialg
