// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "trialg/algebra/center.hpp"
#include "trialg/algebra/families.hpp"
#include "trialg/cli/config.hpp"
#include "trialg/cli/runner.hpp"
#include "trialg/maps/predicates.hpp"
#include "trialg/maps/solve.hpp"
#include "trialg/structure/decompose.hpp"
#include "trialg/theorems/theorems.hpp"

using namespace trialg;

namespace {

const Field Q = Field::rational();
const Field F5 = Field::prime(5);

// Collects failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Twisted {
  TriangularAlgebra T;
  LinearEndo sigma;
  std::string label;
};

LinearEndo identity_of(const TriangularAlgebra& T) { return LinearEndo::identity(T.field(), T.dim()); }

LinearEndo diag_sign(const TriangularAlgebra& T) {
  return *conjugation(T.algebra(), T.embed(T.A().one(), T.M().zero(), -T.B().one()));
}

// Conjugation by a fixed-seed random element (a, m, b) with a and b invertible.
LinearEndo inner(const TriangularAlgebra& T, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const Vector a = oracle::random_vector(T.field(), T.A().dim(), rng, 3);
    const Vector b = oracle::random_vector(T.field(), T.B().dim(), rng, 3);
    if (!inverse_element(T.A(), a) || !inverse_element(T.B(), b)) continue;
    const Vector w = T.embed(a, oracle::random_vector(T.field(), T.M().dim(), rng, 3), b);
    LinearEndo s = *conjugation(T.algebra(), w);
    if (!s.is_identity()) return s;
  }
}

// Identity twists on T_2, T_3 and block(2,1); sign and inner twists on the flagged instances.
std::vector<Twisted> theorem_instances() {
  std::vector<Twisted> out;
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(3, Q), block_upper({2, 1}, 1, Q)}) {
    out.push_back({T, identity_of(T), T.name() + " Id"});
  }
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(2, F5), poly_triangular(3, Q)}) {
    out.push_back({T, diag_sign(T), T.name() + " diag-sign"});
    out.push_back({T, inner(T, 1), T.name() + " inner#1"});
    out.push_back({T, inner(T, 2), T.name() + " inner#2"});
  }
  return out;
}

std::vector<Twisted> flagged_instances() {
  std::vector<Twisted> out;
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(2, F5), poly_triangular(3, Q)}) {
    out.push_back({T, identity_of(T), T.name() + " Id"});
    out.push_back({T, diag_sign(T), T.name() + " diag-sign"});
    out.push_back({T, inner(T, 3), T.name() + " inner"});
  }
  return out;
}

void n3_example(Check& c) {
  const N3Fixture fx = fixture_n3(Q);
  const FDAlgebra& N = fx.algebra;
  const LinearEndo id = LinearEndo::identity(Q, 3);
  c.expect(check_bracket_condition(N, fx.theta, fx.sigma, BracketMode::skew_commuting).ok,
           "Theta is not sigma-skew-commuting");
  const CheckResult plain = check_bracket_condition(N, fx.theta, id, BracketMode::skew_commuting);
  c.expect(!plain.ok, "Theta is skew-commuting");
  const Vector x = N.basis_element(0) + N.basis_element(2);
  c.expect(plain.witness && plain.witness->element == x, "witness is not e12 + e23");
  const Vector value = oracle::mul(N, fx.theta(x), x) + oracle::mul(N, x, fx.theta(x));
  c.expect(value == Q.from_int(2) * N.basis_element(1), "<Theta(x), x> != 2 e13, got " + N.format(value));
  c.expect(bracket_value(N, fx.theta, id, BracketMode::skew_commuting, x) == value,
           "library bracket value disagrees");
}

void aa0_example(Check& c) {
  const TrianAA0Fixture fx = fixture_trian_AA0(4, Q);
  const FDAlgebra& T = fx.algebra;
  const LinearEndo id = LinearEndo::identity(Q, T.dim());
  c.expect(is_sigma_derivation(T, fx.d, fx.sigma).ok, "d is not a sigma-derivation");
  c.expect(!is_sigma_derivation(T, fx.d, id).ok, "d is a derivation");
  const Vector a = fx.element({0, 1}, {0, 1});
  const Vector d_ab = fx.d(oracle::mul(T, a, a));
  const Vector leibniz = oracle::mul(T, fx.d(a), a) + oracle::mul(T, a, fx.d(a));
  const Vector x2 = fx.element({}, {0, 0, 1});
  c.expect(d_ab == x2, "d(ab) is not (0, x^2)");
  c.expect(leibniz == -x2, "d(a)b + a d(b) is not (0, -x^2)");
  c.expect(is_generalized_pair(T, fx.D, fx.d, fx.sigma).ok, "(D, d) is not a generalized sigma-pair");
  const MapSpace pairs = solve_space(T, id, MapKind::generalized_pair);
  c.expect(!pairs.first_component_space().contains(fx.D.coordinates()),
           "some Id-generalized pair has first component D");
  c.expect(!find_associated_derivation(T, fx.D, id).has_value(), "an Id-partner for D exists");
}

void center_regression(Check& c) {
  for (std::size_t n : {2, 3, 4}) {
    const auto T = upper_triangular(n, Q);
    const CenterData z = center(T);  // throws if the kernel and block descriptions differ
    const Subspace expected = Subspace::span(Q, T.dim(), oracle::center(T.algebra()));
    c.expect(z.center.dim() == 1, T.name() + ": dim Z = " + std::to_string(z.center.dim()));
    c.expect(z.center == expected, T.name() + ": center differs from oracle");
  }
}

void derivation_regression(Check& c) {
  const auto T = upper_triangular(2, Q);
  const FDAlgebra& A = T.algebra();
  const MapSpace der = solve_space(A, identity_of(T), MapKind::derivation);
  std::vector<Vector> inner_images;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    inner_images.push_back(inner_derivation(A, A.basis_element(i)).coordinates());
  }
  c.expect(der.dim() == 2, "dim Der(T_2) = " + std::to_string(der.dim()));
  c.expect(der.space == Subspace::span(Q, A.dim() * A.dim(), inner_images),
           "inner derivations do not span the derivation space");
}

void posner_suite(Check& c) {
  for (const auto& inst : theorem_instances()) {
    const TheoremReport r = verify_posner(inst.T, inst.sigma, inst.label);
    c.expect(r.passed && r.dimensions.at("intersection") == 0,
             inst.label + ": intersection dim " + std::to_string(r.dimensions.at("intersection")));
  }
}

void skew_suite(Check& c) {
  for (const auto& inst : theorem_instances()) {
    const MapSpace s = solve_space(inst.T.algebra(), inst.sigma, MapKind::skew_commuting);
    c.expect(s.dim() == 0, inst.label + ": skew-commuting dim " + std::to_string(s.dim()));
  }
}

void sharma_dhara_suite(Check& c) {
  for (const auto& A : {upper_triangular(2, Q).algebra(), upper_triangular(3, Q).algebra(),
                        full_matrix_algebra(2, Q)}) {
    const LinearEndo id = LinearEndo::identity(Q, A.dim());
    const Subspace skew = solve_space(A, id, MapKind::skew_centralizing).space;
    const Subspace comm = solve_space(A, id, MapKind::commuting).space;
    c.expect(subspace_leq(skew, comm), A.name() + ": skew-centralizing not inside commuting");
  }
}

void gd_suite(Check& c) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(3, Q)}) {
    const FDAlgebra& A = T.algebra();
    const MapSpace pairs = solve_centralizing_generalized_pairs(A);
    for (std::size_t k = 0; k < pairs.dim(); ++k) {
      auto [D, d] = pairs.pair(k);
      c.expect(is_left_multiplier(A, D).ok, T.name() + ": D is not a left multiplier");
      c.expect(d.is_zero(), T.name() + ": associated derivation is nonzero");
    }
    c.expect(verify_gd_left_mult(T).passed, T.name() + ": theorem report failed");
  }
}

void round_trips(Check& c) {
  for (const auto& inst : flagged_instances()) {
    const auto& T = inst.T;
    const FDAlgebra& A = T.algebra();
    const AutParts s = decompose_automorphism(T, inst.sigma);
    c.expect(compose_automorphism(T, s) == inst.sigma, inst.label + ": sigma round trip");
    const auto tag = [&](MapKind k, std::size_t r) {
      return inst.label + " " + to_string(k) + "[" + std::to_string(r) + "]";
    };
    for (MapKind kind : {MapKind::sigma_derivation, MapKind::centralizing, MapKind::commuting,
                         MapKind::generalized_pair, MapKind::left_multiplier}) {
      const MapSpace space = solve_space(A, inst.sigma, kind);
      for (std::size_t r = 0; r < space.dim(); ++r) {
        try {
          if (kind == MapKind::sigma_derivation) {
            const LinearEndo d = space.endo(r);
            c.expect(compose_sigma_derivation(T, s, decompose_sigma_derivation(T, inst.sigma, d)) == d, tag(kind, r));
          } else if (kind == MapKind::centralizing || kind == MapKind::commuting) {
            const LinearEndo theta = space.endo(r);
            const CentParts p = decompose_centralizing(T, inst.sigma, theta);
            for (const auto& cond : check_centralizing_conditions(T, s, p)) {
              c.expect(cond.ok, tag(kind, r) + " condition (" + cond.label + ")");
            }
            c.expect(compose_centralizing(T, s, p) == theta, tag(kind, r));
            if (kind == MapKind::commuting) c.expect(commuting_criterion(T, s, p), tag(kind, r) + " criterion");
          } else if (kind == MapKind::generalized_pair) {
            auto [D, d] = space.pair(r);
            const GenParts p = decompose_generalized(T, inst.sigma, D, d);
            c.expect(compose_generalized(T, s, p) == D, tag(kind, r));
            c.expect(compose_sigma_derivation(T, s, p.d_parts) == d, tag(kind, r) + " d");
          } else {
            const LinearEndo F = space.endo(r);
            c.expect(compose_left_multiplier(T, decompose_left_multiplier(T, F)) == F, tag(kind, r));
          }
        } catch (const Error& e) {
          c.expect(false, tag(kind, r) + ": " + e.what());
        }
      }
    }
  }
}

void mayne_suite(Check& c) {
  for (const auto& T : {upper_triangular(2, Q), upper_triangular(2, F5)}) {
    const FDAlgebra& A = T.algebra();
    const LinearEndo id = identity_of(T);
    std::size_t rejected = 0;
    const auto samples = sample_automorphisms(T, 50, 20240601);
    for (const auto& s : samples) {
      c.expect(!s.is_identity() && is_automorphism(A, s).ok, T.name() + ": bad sample");
      if (!check_bracket_condition(A, s, id, BracketMode::centralizing).ok) ++rejected;
    }
    c.expect(samples.size() == 50 && rejected == 50,
             T.name() + ": " + std::to_string(rejected) + "/50 not centralizing");
    c.expect(check_bracket_condition(A, id, id, BracketMode::commuting).ok, T.name() + ": Id not commuting");
    c.expect(verify_mayne(T, 50, 20240601).passed, T.name() + ": theorem report failed");
  }
}

void determinism(Check& c) {
  const std::vector<json> configs = {
      {{"schema_version", 1}, {"field", "rational"}, {"algebra", {{"family", "T_n"}, {"n", 3}}},
       {"tasks", {"center", "sigma_center", "solve:derivation", "solve:centralizing", "solve:generalized_pair",
                  "decompose:sigma_derivation", "decompose:centralizing", "decompose:generalized_pair",
                  "decompose:left_multiplier", "verify:posner", "verify:skew_zero", "verify:sharma_dhara",
                  "verify:gd_left_mult"}}},
      {{"schema_version", 1}, {"field", {{"prime", 5}}}, {"algebra", {{"family", "T_n"}, {"n", 2}}},
       {"sigma", {{"diag_signs", {1, -1}}}}, {"seed", 7},
       {"tasks", {"sigma_center", "decompose:automorphism", "decompose:centralizing", "verify:posner",
                  "verify:mayne", "idempotents"}}},
      {{"schema_version", 1}, {"algebra", {{"fixture", "trian_AA0"}, {"N", 4}}}, {"sigma", "fixture"},
       {"tasks", {"fixture_checks"}}},
  };
  for (const json& j : configs) {
    const std::string first = render_report(run(parse_config(j)).report);
    const std::string second = render_report(run(parse_config(j)).report);
    c.expect(first == second, "reports differ for " + j["algebra"].dump());
    c.expect(render_report(json::parse(first)) == first, "report does not round-trip");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"n3 example: sigma-skew-commuting, not skew-commuting, <Theta(x), x> = 2e13", n3_example},
      {"trian_AA0(4) example: d, (D, d) and the missing Id-partner", aa0_example},
      {"center regression: dim Z(T_n(Q)) = 1 for n = 2, 3, 4", center_regression},
      {"derivation regression: Der(T_2(Q)) has dim 2, spanned by inner derivations", derivation_regression},
      {"Posner suite: sigma-derivations meet sigma-centralizing maps in 0", posner_suite},
      {"skew-commuting suite: only the zero map", skew_suite},
      {"Sharma-Dhara suite: skew-centralizing inside commuting", sharma_dhara_suite},
      {"generalized-derivation suite: centralizing D is a left multiplier, d = 0", gd_suite},
      {"structure round trips: decompose, side conditions, recompose", round_trips},
      {"Mayne suite: 50 sampled automorphisms are not centralizing", mayne_suite},
      {"determinism: identical config and seed give identical reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << "\n";
    for (const auto& f : c.failures()) std::cout << "       " << f << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
