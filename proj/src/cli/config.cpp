#include "trialg/cli/config.hpp"

#include <set>

#include "trialg/maps/predicates.hpp"
#include "trialg/maps/solve.hpp"
#include "trialg/structure/decompose.hpp"
#include "trialg/theorems/theorems.hpp"

namespace trialg {
namespace {

const std::set<std::string> kDecomposeKinds{"automorphism", "sigma_derivation", "centralizing",
                                            "generalized_pair", "left_multiplier"};
const std::set<std::string> kTheorems{"posner", "mayne", "skew_zero", "sharma_dhara",
                                      "gd_left_mult"};

std::uint64_t get_uint(const json& obj, const std::string& key, const std::string& where,
                       std::optional<std::uint64_t> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(where + "/" + key, "missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(where + "/" + key, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + "/" + key, "unknown key");
  }
}

Field parse_field(const json& j) {
  try {
    if (j == "rational") return Field::rational();
    if (j.is_object() && j.size() == 1 && j.contains("prime")) {
      return Field::prime(get_uint(j, "prime", "/field"));
    }
  } catch (const InvalidParameter& e) {
    throw ConfigError("/field", e.what());
  }
  throw ConfigError("/field", "expected \"rational\" or {\"prime\": p}");
}

bool valid_task(const std::string& task) {
  if (task == "center" || task == "sigma_center" || task == "fixture_checks" ||
      task == "idempotents") {
    return true;
  }
  const auto colon = task.find(':');
  if (colon == std::string::npos) return false;
  const std::string head = task.substr(0, colon), tail = task.substr(colon + 1);
  if (head == "solve") return parse_map_kind(tail).has_value();
  if (head == "decompose") return kDecomposeKinds.count(tail) > 0;
  if (head == "verify") return kTheorems.count(tail) > 0;
  return false;
}

struct BuiltAlgebra {
  std::optional<TriangularAlgebra> triangular;
  std::optional<FDAlgebra> plain;
  std::optional<N3Fixture> n3;
  std::optional<TrianAA0Fixture> aa0;
  std::optional<MatrixLayout> layout;  // matrix positions of the basis, when known
};

FDAlgebra inline_algebra(Field field, const json& spec) {
  const std::string where = "/algebra/inline";
  reject_unknown_keys(spec, {"labels", "table", "unit", "only_trivial_idempotents", "name"}, where);
  if (!spec.contains("labels") || !spec["labels"].is_array()) {
    throw ConfigError(where + "/labels", "expected a list of basis labels");
  }
  std::vector<std::string> labels;
  for (const auto& l : spec["labels"]) {
    if (!l.is_string()) throw ConfigError(where + "/labels", "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t n = labels.size();
  if (!spec.contains("table") || !spec["table"].is_array() || spec["table"].size() != n) {
    throw ConfigError(where + "/table", "expected an n x n table of coordinate vectors");
  }
  StructureConstants table;
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = spec["table"][i];
    if (!row.is_array() || row.size() != n) {
      throw ConfigError(where + "/table/" + std::to_string(i), "expected " + std::to_string(n) + " products");
    }
    std::vector<Vector> products;
    for (std::size_t j = 0; j < n; ++j) {
      try {
        products.push_back(decode_vector(field, row[j], n));
      } catch (const InvalidParameter& e) {
        throw ConfigError(where + "/table/" + std::to_string(i) + "/" + std::to_string(j), e.what());
      }
    }
    table.push_back(std::move(products));
  }
  std::optional<Vector> unit;
  if (spec.contains("unit") && !spec["unit"].is_null()) {
    try {
      unit = decode_vector(field, spec["unit"], n);
    } catch (const InvalidParameter& e) {
      throw ConfigError(where + "/unit", e.what());
    }
  }
  const bool flag = spec.value("only_trivial_idempotents", false);
  const std::string name = spec.value("name", std::string("inline"));
  return make_algebra(field, std::move(labels), std::move(table), std::move(unit), flag, name);
}

BuiltAlgebra build_algebra(Field field, const json& spec) {
  const std::string where = "/algebra";
  if (!spec.is_object()) throw ConfigError(where, "expected an object");
  BuiltAlgebra out;
  try {
    if (spec.contains("inline")) {
      reject_unknown_keys(spec, {"inline"}, where);
      out.plain = inline_algebra(field, spec["inline"]);
      return out;
    }
    if (spec.contains("fixture")) {
      const std::string name = spec["fixture"].is_string() ? spec["fixture"].get<std::string>() : "";
      if (name == "n3") {
        reject_unknown_keys(spec, {"fixture"}, where);
        out.n3 = fixture_n3(field);
      } else if (name == "trian_AA0") {
        reject_unknown_keys(spec, {"fixture", "N"}, where);
        out.aa0 = fixture_trian_AA0(get_uint(spec, "N", where, 4), field);
      } else {
        throw ConfigError(where + "/fixture", "unknown fixture " + spec["fixture"].dump());
      }
      return out;
    }
    if (!spec.contains("family") || !spec["family"].is_string()) {
      throw ConfigError(where, "expected \"family\", \"fixture\" or \"inline\"");
    }
    const std::string family = spec["family"].get<std::string>();
    if (family == "T_n" || family == "Tn") {
      reject_unknown_keys(spec, {"family", "n", "split"}, where);
      out.triangular = upper_triangular(get_uint(spec, "n", where), field,
                                        get_uint(spec, "split", where, 1));
    } else if (family == "block_upper") {
      reject_unknown_keys(spec, {"family", "dims", "split"}, where);
      if (!spec.contains("dims") || !spec["dims"].is_array()) {
        throw ConfigError(where + "/dims", "expected a list of block sizes");
      }
      std::vector<std::size_t> dims;
      for (const auto& d : spec["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() <= 0) throw ConfigError(where + "/dims", "block sizes must be positive integers");
        dims.push_back(d.get<std::size_t>());
      }
      out.triangular = block_upper(dims, get_uint(spec, "split", where), field);
    } else if (family == "poly_triangular") {
      reject_unknown_keys(spec, {"family", "N"}, where);
      out.triangular = poly_triangular(get_uint(spec, "N", where, 3), field);
    } else if (family == "full_matrix") {
      reject_unknown_keys(spec, {"family", "n"}, where);
      const std::size_t n = get_uint(spec, "n", where);
      out.plain = full_matrix_algebra(n, field);
      MatrixLayout layout{n, {}};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) layout.positions.emplace_back(i, j);
      out.layout = std::move(layout);
    } else if (family == "trunc_poly") {
      reject_unknown_keys(spec, {"family", "N"}, where);
      out.plain = trunc_poly(get_uint(spec, "N", where), field);
    } else {
      throw ConfigError(where + "/family", "unknown family \"" + family + "\"");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(where, e.what());
  }
  if (out.triangular) out.layout = out.triangular->matrix_layout();
  return out;
}

std::string join_scalars(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

std::pair<LinearEndo, std::string> build_sigma(const Instance& built,
                                               const std::optional<MatrixLayout>& layout,
                                               const json& spec) {
  const FDAlgebra& A = built.algebra();
  const std::string where = "/sigma";
  const Field field = A.field();
  if (spec == "identity") return {LinearEndo::identity(field, A.dim()), "identity"};
  if (spec == "fixture") {
    if (built.n3) return {built.n3->sigma, "fixture"};
    if (built.aa0) return {built.aa0->sigma, "fixture"};
    throw ConfigError(where, "\"fixture\" needs a fixture algebra");
  }
  if (!spec.is_object() || spec.size() != 1) {
    throw ConfigError(where, "expected \"identity\", \"fixture\" or an object with one key");
  }
  try {
    if (spec.contains("diag_signs")) {
      const Vector signs = decode_vector(field, spec["diag_signs"], spec["diag_signs"].size());
      for (const auto& s : signs) {
        if (!s.is_one() && !(-s).is_one()) throw ConfigError(where + "/diag_signs", "entries must be 1 or -1");
      }
      Vector w = A.zero();
      if (layout) {
        if (signs.size() != layout->size) {
          throw ConfigError(where + "/diag_signs", "expected " + std::to_string(layout->size) + " signs");
        }
        for (std::size_t k = 0; k < layout->positions.size(); ++k) {
          const auto [i, j] = layout->positions[k];
          if (i == j) w[k] = signs[i];
        }
      } else if (built.triangular) {
        if (signs.size() != 2) throw ConfigError(where + "/diag_signs", "expected 2 signs (A and B blocks)");
        const auto& T = *built.triangular;
        w = T.embed(signs[0] * T.A().one(), T.M().zero(), signs[1] * T.B().one());
      } else {
        throw ConfigError(where + "/diag_signs", "needs a matrix family or a triangular algebra");
      }
      auto sigma = conjugation(A, w);
      if (!sigma) throw ConfigError(where + "/diag_signs", "diagonal element is not invertible");
      return {*sigma, "diag_signs(" + join_scalars(signs) + ")"};
    }
    if (spec.contains("conjugate_by")) {
      const Vector u = decode_vector(field, spec["conjugate_by"], A.dim());
      auto sigma = conjugation(A, u);
      if (!sigma) throw ConfigError(where + "/conjugate_by", "element is not invertible");
      return {*sigma, "conjugate_by(" + join_scalars(u) + ")"};
    }
    if (spec.contains("parts")) {
      if (!built.triangular) throw ConfigError(where + "/parts", "needs a triangular algebra");
      const auto& T = *built.triangular;
      const json& p = spec["parts"];
      if (!p.is_object()) throw ConfigError(where + "/parts", "expected an object");
      reject_unknown_keys(p, {"f", "g", "m_sigma", "nu"}, where + "/parts");
      for (const char* key : {"f", "g", "m_sigma", "nu"}) {
        if (!p.contains(key)) throw ConfigError(where + "/parts/" + key, "missing");
      }
      const std::size_t da = T.A().dim(), db = T.B().dim(), dm = T.M().dim();
      AutParts parts{LinearEndo(decode_matrix(field, p["f"], da, da)),
                     LinearEndo(decode_matrix(field, p["g"], db, db)),
                     decode_vector(field, p["m_sigma"], dm),
                     LinearEndo(decode_matrix(field, p["nu"], dm, dm))};
      return {compose_automorphism(T, parts), "parts"};
    }
    if (spec.contains("matrix")) {
      return {LinearEndo(decode_matrix(field, spec["matrix"], A.dim(), A.dim())), "matrix"};
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(where, e.what());
  }
  throw ConfigError(where, "unknown sigma form " + spec.dump());
}

void check_task(const Instance& inst, const std::string& task, const std::string& where) {
  const bool triangular = inst.triangular.has_value();
  const bool identity = inst.sigma.is_identity();
  const bool flags = triangular && inst.triangular->hypothesis_flags();
  auto need = [&](bool ok, const std::string& why) {
    if (!ok) throw ConfigError(where, "task \"" + task + "\" " + why);
  };
  if (task == "center" || task == "sigma_center") {
    need(triangular, "needs a triangular algebra");
  } else if (task == "fixture_checks") {
    need(inst.n3 || inst.aa0, "needs a fixture algebra");
  } else if (task == "idempotents") {
    need(inst.algebra().field().is_finite(), "needs a prime field");
  } else if (task.rfind("decompose:", 0) == 0) {
    need(triangular, "needs a triangular algebra");
    const bool gated = task != "decompose:left_multiplier";
    need(!gated || identity || flags,
         "with sigma != Id needs A and B flagged only_trivial_idempotents");
  } else if (task == "verify:posner" || task == "verify:skew_zero") {
    need(triangular, "needs a triangular algebra");
    need(identity || flags, "with sigma != Id needs A and B flagged only_trivial_idempotents");
  } else if (task == "verify:mayne") {
    need(flags, "needs a triangular algebra with A and B flagged only_trivial_idempotents");
  } else if (task == "verify:gd_left_mult") {
    need(triangular, "needs a triangular algebra");
  } else if (task == "verify:sharma_dhara") {
    need(find_left_identity(inst.algebra()).has_value(), "needs an algebra with a left identity");
  }
}

}  // namespace

const FDAlgebra& Instance::algebra() const {
  if (triangular) return triangular->algebra();
  if (plain) return *plain;
  if (n3) return n3->algebra;
  return aa0->algebra;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("", "config must be a JSON object");
  reject_unknown_keys(j,
                      {"schema_version", "field", "algebra", "sigma", "tasks", "seed",
                       "enumeration_bound", "mayne_samples"},
                      "");
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
    throw ConfigError("/schema_version", "expected 1");
  }
  RunConfig c;
  if (j.contains("field")) c.field = parse_field(j["field"]);
  if (!j.contains("algebra")) throw ConfigError("/algebra", "missing");
  c.algebra = j["algebra"];
  if (j.contains("sigma")) c.sigma = j["sigma"];
  if (!j.contains("tasks") || !j["tasks"].is_array() || j["tasks"].empty()) {
    throw ConfigError("/tasks", "expected a non-empty list of task names");
  }
  for (std::size_t i = 0; i < j["tasks"].size(); ++i) {
    const json& t = j["tasks"][i];
    if (!t.is_string() || !valid_task(t.get<std::string>())) {
      throw ConfigError("/tasks/" + std::to_string(i), "unknown task " + t.dump());
    }
    c.tasks.push_back(t.get<std::string>());
  }
  c.seed = get_uint(j, "seed", "", 0);
  c.enumeration_bound = get_uint(j, "enumeration_bound", "", kDefaultEnumerationBound);
  c.mayne_samples = get_uint(j, "mayne_samples", "", 50);
  if (c.mayne_samples == 0) throw ConfigError("/mayne_samples", "must be positive");
  return c;
}

Instance build_instance(const RunConfig& config) {
  BuiltAlgebra built = build_algebra(config.field, config.algebra);
  Instance inst{std::move(built.triangular), std::move(built.plain), std::move(built.n3),
                std::move(built.aa0), LinearEndo::zero(config.field, 0), ""};
  auto [sigma, name] = build_sigma(inst, built.layout, config.sigma);
  const CheckResult aut = is_automorphism(inst.algebra(), sigma);
  if (!aut) throw ConfigError("/sigma", "not an automorphism: " + aut.witness->reason);
  inst.sigma = std::move(sigma);
  inst.sigma_name = std::move(name);
  for (std::size_t i = 0; i < config.tasks.size(); ++i) {
    check_task(inst, config.tasks[i], "/tasks/" + std::to_string(i));
  }
  return inst;
}

}  // namespace trialg
