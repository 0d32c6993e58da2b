#pragma once

#include <string>

#include "trialg/error.hpp"
#include "trialg/structure/blocks.hpp"
#include "trialg/structure/decompose.hpp"

namespace trialg::detail {

inline void require_flags(const TriangularAlgebra& T, const std::string& what) {
  if (!T.hypothesis_flags()) {
    throw HypothesisNotMet(what + " needs A and B with only trivial idempotents");
  }
}

inline void require_reconstruction(const LinearEndo& rebuilt, const LinearEndo& original,
                                   const std::string& what) {
  if (auto j = first_difference(rebuilt, original)) throw ReconstructionMismatch(what, *j);
}

// Unchecked recomposition from parts; callers validate.
LinearEndo build_automorphism(const TriangularAlgebra& T, const AutParts& parts);

}  // namespace trialg::detail
