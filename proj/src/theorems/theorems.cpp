#include "trialg/theorems/theorems.hpp"

#include <random>

#include "trialg/error.hpp"
#include "trialg/maps/predicates.hpp"
#include "trialg/maps/solve.hpp"
#include "trialg/structure/decompose.hpp"

namespace trialg {
namespace {

TheoremReport base_report(std::string theorem, const FDAlgebra& A, std::string sigma) {
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.instance = A.name();
  r.field = A.field().name();
  r.sigma = std::move(sigma);
  return r;
}

void require_flags_unless_identity(const TriangularAlgebra& T, const LinearEndo& sigma,
                                   const std::string& theorem) {
  if (!sigma.is_identity() && !T.hypothesis_flags()) {
    throw HypothesisNotMet(theorem + " with sigma != Id needs A and B with only trivial idempotents");
  }
}

// A reported witness must really contradict the theorem; anything else is a bug.
void confirm_witness(bool genuine, const std::string& theorem) {
  if (!genuine) throw StructuralMismatch(theorem + ": witness does not survive re-checking");
}

Scalar random_scalar(Field field, std::mt19937_64& rng) {
  if (field.is_rational()) return field.from_int(static_cast<long long>(rng() % 7) - 3);
  return field.from_int(static_cast<long long>(rng() % field.characteristic()));
}

Vector random_vector(Field field, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng));
  return v;
}

// Returns (u, u^-1) for a random invertible u.
std::pair<Vector, Vector> random_unit(const FDAlgebra& A, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vector u = random_vector(A.field(), A.dim(), rng);
    if (auto inv = inverse_element(A, u)) return {std::move(u), std::move(*inv)};
  }
  throw InvalidParameter("could not sample an invertible element of " + A.name());
}

LinearEndo parts_sample(const TriangularAlgebra& T, std::mt19937_64& rng) {
  const auto& M = T.M();
  const auto [u, u_inv] = random_unit(T.A(), rng);
  const auto [v, v_inv] = random_unit(T.B(), rng);
  Scalar c = random_scalar(T.field(), rng);
  while (c.is_zero()) c = random_scalar(T.field(), rng);

  std::vector<Vector> nu_images;
  for (std::size_t k = 0; k < M.dim(); ++k) {
    nu_images.push_back(c * M.left_act(u, M.right_act(M.basis_element(k), v_inv)));
  }
  AutParts parts{*conjugation(T.A(), u), *conjugation(T.B(), v),
                 random_vector(T.field(), M.dim(), rng),
                 LinearEndo::from_images(T.field(), M.dim(), nu_images)};
  return compose_automorphism(T, parts);
}

LinearEndo conjugation_sample(const TriangularAlgebra& T, std::mt19937_64& rng) {
  const Vector a = random_unit(T.A(), rng).first;
  const Vector b = random_unit(T.B(), rng).first;
  const Vector w = T.embed(a, random_vector(T.field(), T.M().dim(), rng), b);
  return *conjugation(T.algebra(), w);
}

}  // namespace

std::optional<Vector> find_left_identity(const FDAlgebra& A) {
  if (A.is_unital()) return A.one();
  // sum_i e_i coefficients c_i with sum_i c_i (e_i e_j) = e_j for every j.
  const std::size_t n = A.dim();
  Matrix sys(A.field(), n * n, n);
  Vector rhs = zero_vector(A.field(), n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector& prod = A.basis_product(i, j);
      for (std::size_t r = 0; r < n; ++r) sys(j * n + r, i) = prod[r];
    }
    rhs[j * n + j] = A.field().one();
  }
  return solve_linear(sys, rhs);
}

std::vector<LinearEndo> sample_automorphisms(const TriangularAlgebra& T, std::size_t count,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LinearEndo> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100 * (count + 1)) {
      throw InvalidParameter("automorphism sampler keeps producing the identity");
    }
    LinearEndo s = out.size() % 2 == 0 ? parts_sample(T, rng) : conjugation_sample(T, rng);
    if (!s.is_identity()) out.push_back(std::move(s));
  }
  return out;
}

TheoremReport verify_posner(const TriangularAlgebra& T, const LinearEndo& sigma,
                            const std::string& sigma_name) {
  require_flags_unless_identity(T, sigma, "posner");
  const FDAlgebra& A = T.algebra();
  TheoremReport r = base_report("posner", A, sigma_name);
  const MapSpace der = solve_space(A, sigma, MapKind::sigma_derivation);
  const MapSpace cent = solve_space(A, sigma, MapKind::centralizing);
  const Subspace both = subspace_intersect(der.space, cent.space);
  const Subspace swapped = subspace_intersect(cent.space, der.space);
  if (both != swapped) throw StructuralMismatch("subspace intersection is not symmetric");

  r.dimensions = {{"sigma_derivation", der.dim()},
                  {"centralizing", cent.dim()},
                  {"intersection", both.dim()}};
  r.passed = both.dim() == 0;
  if (!r.passed) {
    LinearEndo d = LinearEndo::from_coordinates(A.field(), A.dim(), both.basis().front());
    confirm_witness(!d.is_zero() && is_sigma_derivation(A, d, sigma) &&
                        check_bracket_condition(A, d, sigma, BracketMode::centralizing),
                    "posner");
    r.witness = std::move(d);
    r.note = "nonzero sigma-derivation that is sigma-centralizing";
  }
  return r;
}

TheoremReport verify_skew_zero(const TriangularAlgebra& T, const LinearEndo& sigma,
                               const std::string& sigma_name) {
  require_flags_unless_identity(T, sigma, "skew_zero");
  const FDAlgebra& A = T.algebra();
  TheoremReport r = base_report("skew_zero", A, sigma_name);
  const MapSpace skew = solve_space(A, sigma, MapKind::skew_commuting);
  r.dimensions = {{"skew_commuting", skew.dim()}};
  r.passed = skew.dim() == 0;
  if (!r.passed) {
    LinearEndo w = skew.endo(0);
    confirm_witness(check_bracket_condition(A, w, sigma, BracketMode::skew_commuting).ok,
                    "skew_zero");
    r.witness = std::move(w);
    r.note = "nonzero sigma-skew-commuting map";
  }
  return r;
}

TheoremReport verify_sharma_dhara(const FDAlgebra& A) {
  if (!find_left_identity(A)) throw HypothesisNotMet(A.name() + " has no left identity");
  TheoremReport r = base_report("sharma_dhara", A, "identity");
  const LinearEndo id = LinearEndo::identity(A.field(), A.dim());
  const MapSpace skew = solve_space(A, id, MapKind::skew_centralizing);
  const MapSpace comm = solve_space(A, id, MapKind::commuting);
  r.dimensions = {{"skew_centralizing", skew.dim()}, {"commuting", comm.dim()}};
  r.passed = subspace_leq(skew.space, comm.space);
  if (!r.passed) {
    for (std::size_t k = 0; k < skew.dim(); ++k) {
      if (comm.space.contains(skew.space.basis()[k])) continue;
      LinearEndo w = skew.endo(k);
      confirm_witness(check_bracket_condition(A, w, id, BracketMode::skew_centralizing) &&
                          !check_bracket_condition(A, w, id, BracketMode::commuting),
                      "sharma_dhara");
      r.witness = std::move(w);
      break;
    }
    r.note = "skew-centralizing map that is not commuting";
  }
  return r;
}

TheoremReport verify_gd_left_mult(const TriangularAlgebra& T) {
  const FDAlgebra& A = T.algebra();
  TheoremReport r = base_report("gd_left_mult", A, "identity");
  const LinearEndo id = LinearEndo::identity(A.field(), A.dim());
  const MapSpace pairs = solve_centralizing_generalized_pairs(A);
  const MapSpace left = solve_space(A, id, MapKind::left_multiplier);
  const Subspace d_space = pairs.first_component_space();
  r.dimensions = {{"centralizing_generalized", pairs.dim()},
                  {"centralizing_generalized_D", d_space.dim()},
                  {"left_multiplier", left.dim()}};
  r.passed = true;
  for (std::size_t k = 0; k < pairs.dim() && r.passed; ++k) {
    auto [D, d] = pairs.pair(k);
    std::string failure;
    if (!is_left_multiplier(A, D)) {
      failure = "D is not a left multiplier";
    } else if (!d.is_zero()) {
      failure = "associated derivation is nonzero";
    } else {
      const GenParts parts = decompose_generalized(T, id, D, d);
      if (!is_zero(parts.m_d) || !parts.xi.is_zero()) failure = "m_d or xi is nonzero";
    }
    if (failure.empty()) continue;
    confirm_witness(is_generalized_pair(A, D, d, id) &&
                        check_bracket_condition(A, D, id, BracketMode::centralizing),
                    "gd_left_mult");
    r.passed = false;
    r.witness = std::move(D);
    r.note = failure;
  }
  if (r.passed && !subspace_leq(d_space, left.space)) {
    throw StructuralMismatch("left multipliers found per basis element but not as a subspace");
  }
  return r;
}

TheoremReport verify_mayne(const TriangularAlgebra& T, std::size_t samples, std::uint64_t seed) {
  if (!T.hypothesis_flags()) {
    throw HypothesisNotMet("mayne needs A and B with only trivial idempotents");
  }
  const FDAlgebra& A = T.algebra();
  TheoremReport r = base_report("mayne", A, "sampled seed=" + std::to_string(seed));
  const LinearEndo id = LinearEndo::identity(A.field(), A.dim());
  const bool identity_commutes = check_bracket_condition(A, id, id, BracketMode::commuting).ok;

  std::size_t rejected = 0;
  for (auto& s : sample_automorphisms(T, samples, seed)) {
    if (!check_bracket_condition(A, s, id, BracketMode::centralizing)) {
      ++rejected;
    } else if (!r.witness) {
      confirm_witness(is_automorphism(A, s) && !s.is_identity(), "mayne");
      r.witness = std::move(s);
      r.note = "non-identity centralizing automorphism";
    }
  }
  r.dimensions = {{"samples", samples}, {"not_centralizing", rejected}};
  r.passed = identity_commutes && rejected == samples;
  if (!identity_commutes) {
    r.witness = id;
    r.note = "identity is not commuting";
  }
  return r;
}

}  // namespace trialg
