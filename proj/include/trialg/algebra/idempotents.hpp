#pragma once

#include <cstdint>
#include <optional>

#include "trialg/algebra/fd_algebra.hpp"

namespace trialg {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// First element e with e^2 = e other than 0 and the unit, by exhaustive
/// enumeration in lexicographic coordinate order.
///
/// Requires a prime field; throws InvalidParameter over Q and
/// EnumerationTooLarge when p^dim exceeds `bound`.
std::optional<Vector> find_nontrivial_idempotent(const FDAlgebra& A,
                                                 std::uint64_t bound = kDefaultEnumerationBound);

bool has_only_trivial_idempotents_bruteforce(const FDAlgebra& A,
                                             std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace trialg
