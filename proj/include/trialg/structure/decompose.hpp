#pragma once

// Block decompositions of maps on a triangular algebra and their recompositions.
// Every decompose_* call verifies its side conditions and that recomposing the
// parts gives back the original map; failures raise, never return partial data.

#include <string>
#include <vector>

#include "trialg/algebra/triangular.hpp"
#include "trialg/exactlin/matrix.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

struct AutParts {
  LinearEndo f;     // on A
  LinearEndo g;     // on B
  Vector m_sigma;   // in M
  LinearEndo nu;    // on M
};

struct DerParts {
  LinearEndo d_a;
  LinearEndo d_b;
  Vector m_d;
  LinearEndo xi;
};

/// Components of a centralizing map. Shapes follow codomain x domain, e.g.
/// delta2 is dim A x dim M.
struct CentParts {
  Matrix delta1, delta2, delta3;
  Matrix mu1, mu2, mu3;
};

struct GenParts {
  LinearEndo D_a;
  LinearEndo D_b;
  Vector m_d;
  Vector m_D;
  LinearEndo xi;
  DerParts d_parts;
  /// Whether the variant with -m_sigma D_B(b) in the M-component also
  /// reproduces D on this instance.
  bool display_variant_agrees;
};

struct MultParts {
  LinearEndo F_a;
  LinearEndo F_b;
  Vector m_F;
};

struct ConditionResult {
  std::string label;
  bool ok;
  std::string witness;  // empty when ok
};

/// Parts of sigma. The identity gives identity parts without the
/// trivial-idempotent hypothesis; otherwise A and B must carry the flag.
/// Throws NotAutomorphism, HypothesisNotMet or ReconstructionMismatch.
AutParts decompose_automorphism(const TriangularAlgebra& T, const LinearEndo& sigma);
/// (a, m, b) -> (f(a), f(a) m_sigma - m_sigma g(b) + nu(m), g(b)). Throws
/// InvalidParts unless the parts define an automorphism.
LinearEndo compose_automorphism(const TriangularAlgebra& T, const AutParts& parts);

/// The sigma = Id case needs no hypothesis on A and B.
DerParts decompose_sigma_derivation(const TriangularAlgebra& T, const LinearEndo& sigma,
                                    const LinearEndo& d);
LinearEndo compose_sigma_derivation(const TriangularAlgebra& T, const AutParts& sigma_parts,
                                    const DerParts& parts);

CentParts decompose_centralizing(const TriangularAlgebra& T, const LinearEndo& sigma,
                                 const LinearEndo& theta);
LinearEndo compose_centralizing(const TriangularAlgebra& T, const AutParts& sigma_parts,
                                const CentParts& parts);
/// Conditions (i)-(viii) in order, then the ranges of delta2 and mu2
/// (labels "delta2_range", "mu2_range").
std::vector<ConditionResult> check_centralizing_conditions(const TriangularAlgebra& T,
                                                           const AutParts& sigma_parts,
                                                           const CentParts& parts);
/// delta3(B) in Z_f(A) and mu1(A) in Z_g(B).
bool commuting_criterion(const TriangularAlgebra& T, const AutParts& sigma_parts,
                         const CentParts& parts);

GenParts decompose_generalized(const TriangularAlgebra& T, const LinearEndo& sigma,
                               const LinearEndo& D, const LinearEndo& d);
LinearEndo compose_generalized(const TriangularAlgebra& T, const AutParts& sigma_parts,
                               const GenParts& parts);
/// Same, with -m_sigma D_B(b) in place of -m_sigma d_B(b).
LinearEndo compose_generalized_display(const TriangularAlgebra& T, const AutParts& sigma_parts,
                                       const GenParts& parts);

MultParts decompose_left_multiplier(const TriangularAlgebra& T, const LinearEndo& F);
LinearEndo compose_left_multiplier(const TriangularAlgebra& T, const MultParts& parts);

}  // namespace trialg
