#pragma once

// Defining identities of the structured maps, checked exactly on basis pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "trialg/algebra/fd_algebra.hpp"
#include "trialg/exactlin/subspace.hpp"
#include "trialg/maps/linear_endo.hpp"

namespace trialg {

/// [x, y]_sigma = sigma(x) y - y x
Vector bracket_sigma(const FDAlgebra& A, const LinearEndo& sigma, const Vector& x,
                     const Vector& y);
/// <x, y>_sigma = sigma(x) y + y x
Vector abracket_sigma(const FDAlgebra& A, const LinearEndo& sigma, const Vector& x,
                      const Vector& y);

/// Lexicographically first violating basis pair, plus an element-level
/// witness where the predicate quantifies over elements.
struct Witness {
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<Vector> element;
  std::optional<Vector> value;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
};

/// Invertible, unit-preserving (when unital) and multiplicative on basis pairs.
CheckResult is_automorphism(const FDAlgebra& A, const LinearEndo& theta);
/// d(xy) = d(x) y + sigma(x) d(y)
CheckResult is_sigma_derivation(const FDAlgebra& A, const LinearEndo& d, const LinearEndo& sigma);
/// D(xy) = D(x) y + sigma(x) d(y)
CheckResult is_generalized_pair(const FDAlgebra& A, const LinearEndo& D, const LinearEndo& d,
                                const LinearEndo& sigma);
/// F(xy) = F(x) y
CheckResult is_left_multiplier(const FDAlgebra& A, const LinearEndo& F);

enum class BracketMode { commuting, centralizing, skew_commuting, skew_centralizing };

/// Checks [x, theta(x)]_sigma (or <x, theta(x)>_sigma for the skew modes) is
/// zero, or central for the centralizing modes, for every x.
///
/// The quadratic condition is tested through its polarization: the diagonal
/// terms on every e_i and the symmetrized terms on every pair i < j, which is
/// equivalent in characteristic other than 2. On failure the witness carries
/// the first failing pair and an element x violating the original condition.
CheckResult check_bracket_condition(const FDAlgebra& A, const LinearEndo& theta,
                                    const LinearEndo& sigma, BracketMode mode,
                                    const Subspace& center);
CheckResult check_bracket_condition(const FDAlgebra& A, const LinearEndo& theta,
                                    const LinearEndo& sigma, BracketMode mode);

/// The quadratic expression [x, theta(x)]_sigma or <x, theta(x)>_sigma.
Vector bracket_value(const FDAlgebra& A, const LinearEndo& theta, const LinearEndo& sigma,
                     BracketMode mode, const Vector& x);

}  // namespace trialg
