#include "trialg/algebra/idempotents.hpp"

#include <string>

#include "trialg/error.hpp"

namespace trialg {

std::optional<Vector> find_nontrivial_idempotent(const FDAlgebra& A, std::uint64_t bound) {
  const Field field = A.field();
  if (!field.is_finite()) {
    throw InvalidParameter("idempotent enumeration needs a finite field");
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (total > bound / p) {
      throw EnumerationTooLarge(std::to_string(p) + "^" + std::to_string(A.dim()) +
                                " elements exceed the bound " + std::to_string(bound));
    }
    total *= p;
  }
  if (total > bound) {
    throw EnumerationTooLarge(std::to_string(total) + " elements exceed the bound " +
                              std::to_string(bound));
  }

  std::vector<std::uint64_t> digits(A.dim(), 0);
  Vector e = A.zero();
  for (std::uint64_t count = 0; count < total; ++count) {
    const bool trivial = is_zero(e) || (A.is_unital() && e == A.one());
    if (!trivial && A.mul(e, e) == e) return e;
    // Odometer step, last coordinate fastest.
    for (std::size_t i = A.dim(); i-- > 0;) {
      digits[i] = (digits[i] + 1) % p;
      e[i] = field.from_int(static_cast<long long>(digits[i]));
      if (digits[i] != 0) break;
    }
  }
  return std::nullopt;
}

bool has_only_trivial_idempotents_bruteforce(const FDAlgebra& A, std::uint64_t bound) {
  return !find_nontrivial_idempotent(A, bound).has_value();
}

}  // namespace trialg
