#include "trialg/maps/predicates.hpp"

#include <stdexcept>

#include "trialg/algebra/center.hpp"

namespace trialg {
namespace {

void require_compatible(const FDAlgebra& A, const LinearEndo& f) {
  if (f.dim() != A.dim() || f.field() != A.field()) {
    throw std::invalid_argument("map does not act on this algebra");
  }
}

bool is_skew(BracketMode mode) {
  return mode == BracketMode::skew_commuting || mode == BracketMode::skew_centralizing;
}

bool is_central_mode(BracketMode mode) {
  return mode == BracketMode::centralizing || mode == BracketMode::skew_centralizing;
}

// B(x, y) = [x, theta(y)]_sigma or <x, theta(y)>_sigma; bracket_value(x) = B(x, x).
Vector polar_form(const FDAlgebra& A, const LinearEndo& theta, const LinearEndo& sigma,
                  BracketMode mode, const Vector& x, const Vector& y) {
  const Vector ty = theta(y);
  return is_skew(mode) ? abracket_sigma(A, sigma, x, ty) : bracket_sigma(A, sigma, x, ty);
}

}  // namespace

Vector bracket_sigma(const FDAlgebra& A, const LinearEndo& sigma, const Vector& x,
                     const Vector& y) {
  return A.mul(sigma(x), y) - A.mul(y, x);
}

Vector abracket_sigma(const FDAlgebra& A, const LinearEndo& sigma, const Vector& x,
                      const Vector& y) {
  return A.mul(sigma(x), y) + A.mul(y, x);
}

CheckResult is_automorphism(const FDAlgebra& A, const LinearEndo& theta) {
  require_compatible(A, theta);
  if (theta.matrix().rank() != A.dim()) {
    return CheckResult::fail({"map is not invertible", std::nullopt, std::nullopt, std::nullopt});
  }
  if (A.is_unital() && theta(A.one()) != A.one()) {
    return CheckResult::fail(
        {"map does not preserve the unit", std::nullopt, A.one(), theta(A.one())});
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector lhs = theta(A.basis_product(i, j));
      Vector rhs = A.mul(theta.image(i), theta.image(j));
      if (lhs != rhs) {
        return CheckResult::fail({"not multiplicative", std::pair{i, j}, std::nullopt, lhs - rhs});
      }
    }
  return CheckResult::pass();
}

CheckResult is_sigma_derivation(const FDAlgebra& A, const LinearEndo& d, const LinearEndo& sigma) {
  require_compatible(A, d);
  require_compatible(A, sigma);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector lhs = d(A.basis_product(i, j));
      Vector rhs = A.mul(d.image(i), A.basis_element(j)) + A.mul(sigma.image(i), d.image(j));
      if (lhs != rhs) {
        return CheckResult::fail(
            {"twisted Leibniz rule fails", std::pair{i, j}, std::nullopt, lhs - rhs});
      }
    }
  return CheckResult::pass();
}

CheckResult is_generalized_pair(const FDAlgebra& A, const LinearEndo& D, const LinearEndo& d,
                                const LinearEndo& sigma) {
  require_compatible(A, D);
  require_compatible(A, d);
  require_compatible(A, sigma);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector lhs = D(A.basis_product(i, j));
      Vector rhs = A.mul(D.image(i), A.basis_element(j)) + A.mul(sigma.image(i), d.image(j));
      if (lhs != rhs) {
        return CheckResult::fail(
            {"generalized Leibniz rule fails", std::pair{i, j}, std::nullopt, lhs - rhs});
      }
    }
  return CheckResult::pass();
}

CheckResult is_left_multiplier(const FDAlgebra& A, const LinearEndo& F) {
  require_compatible(A, F);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vector lhs = F(A.basis_product(i, j));
      Vector rhs = A.mul(F.image(i), A.basis_element(j));
      if (lhs != rhs) {
        return CheckResult::fail(
            {"F(xy) = F(x)y fails", std::pair{i, j}, std::nullopt, lhs - rhs});
      }
    }
  return CheckResult::pass();
}

Vector bracket_value(const FDAlgebra& A, const LinearEndo& theta, const LinearEndo& sigma,
                     BracketMode mode, const Vector& x) {
  return polar_form(A, theta, sigma, mode, x, x);
}

CheckResult check_bracket_condition(const FDAlgebra& A, const LinearEndo& theta,
                                    const LinearEndo& sigma, BracketMode mode,
                                    const Subspace& center) {
  require_compatible(A, theta);
  require_compatible(A, sigma);
  const bool central = is_central_mode(mode);
  auto acceptable = [&](const Vector& v) { return central ? center.contains(v) : is_zero(v); };

  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector ei = A.basis_element(i);
      const Vector ej = A.basis_element(j);
      Vector term = polar_form(A, theta, sigma, mode, ei, ej);
      if (i != j) term = term + polar_form(A, theta, sigma, mode, ej, ei);
      if (acceptable(term)) continue;

      // Lift the failing polar term to an element: one of e_i, e_j, e_i + e_j
      // violates the quadratic condition whenever p != 2.
      Witness w{"bracket condition fails", std::pair{i, j}, std::nullopt, std::nullopt};
      for (const Vector& x : {ei, ej, ei + ej}) {
        Vector value = bracket_value(A, theta, sigma, mode, x);
        if (!acceptable(value)) {
          w.element = x;
          w.value = std::move(value);
          break;
        }
      }
      return CheckResult::fail(std::move(w));
    }
  return CheckResult::pass();
}

CheckResult check_bracket_condition(const FDAlgebra& A, const LinearEndo& theta,
                                    const LinearEndo& sigma, BracketMode mode) {
  if (mode == BracketMode::commuting || mode == BracketMode::skew_commuting) {
    return check_bracket_condition(A, theta, sigma, mode, Subspace(A.field(), A.dim()));
  }
  return check_bracket_condition(A, theta, sigma, mode, center_of(A));
}

}  // namespace trialg
