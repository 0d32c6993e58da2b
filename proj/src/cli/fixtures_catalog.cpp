#include "trialg/cli/fixtures_catalog.hpp"

#include "trialg/algebra/families.hpp"
#include "trialg/error.hpp"
#include "trialg/maps/predicates.hpp"
#include "trialg/maps/solve.hpp"

namespace trialg {
namespace {

json n3_entry() {
  const N3Fixture fx = fixture_n3(Field::rational());
  const FDAlgebra& N = fx.algebra;
  const LinearEndo id = LinearEndo::identity(N.field(), N.dim());
  return {{"name", "n3"},
          {"algebra", N.name()},
          {"labels", N.labels()},
          {"maps", {{"sigma", encode(fx.sigma)}, {"theta", encode(fx.theta)}}},
          {"checks",
           {{{"claim", "theta is sigma-skew-commuting"},
             {"holds", check_bracket_condition(N, fx.theta, fx.sigma, BracketMode::skew_commuting).ok}},
            {{"claim", "theta is not skew-commuting"},
             {"holds", !check_bracket_condition(N, fx.theta, id, BracketMode::skew_commuting).ok}}}}};
}

json aa0_entry() {
  const TrianAA0Fixture fx = fixture_trian_AA0(4, Field::rational());
  const FDAlgebra& T = fx.algebra;
  const LinearEndo id = LinearEndo::identity(T.field(), T.dim());
  return {{"name", "trian_AA0"},
          {"algebra", T.name()},
          {"labels", T.labels()},
          {"parameters", {{"N", fx.N}}},
          {"maps", {{"sigma", encode(fx.sigma)}, {"d", encode(fx.d)}, {"D", encode(fx.D)}}},
          {"checks",
           {{{"claim", "d is a sigma-derivation"}, {"holds", is_sigma_derivation(T, fx.d, fx.sigma).ok}},
            {{"claim", "d is not a derivation"}, {"holds", !is_sigma_derivation(T, fx.d, id).ok}},
            {{"claim", "D admits no Id-partner"},
             {"holds", !find_associated_derivation(T, fx.D, id).has_value()}}}}};
}

}  // namespace

json list_fixtures(const std::optional<std::string>& name) {
  if (!name) return json::array({n3_entry(), aa0_entry()});
  if (*name == "n3") return json::array({n3_entry()});
  if (*name == "trian_AA0") return json::array({aa0_entry()});
  throw InvalidParameter("unknown fixture '" + *name + "'");
}

}  // namespace trialg
