#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trialg/algebra/families.hpp"
#include "trialg/algebra/idempotents.hpp"
#include "trialg/cli/json_codec.hpp"
#include "trialg/error.hpp"

namespace trialg {

inline constexpr int kSchemaVersion = 1;

/// Invalid configuration; `location` is a JSON-pointer-like path.
class ConfigError : public Error {
 public:
  ConfigError(std::string location, const std::string& message)
      : Error(location + ": " + message), location(std::move(location)) {}
  std::string location;
};

struct RunConfig {
  Field field = Field::rational();
  json algebra;
  json sigma = "identity";
  std::vector<std::string> tasks;
  std::uint64_t seed = 0;
  std::uint64_t enumeration_bound = kDefaultEnumerationBound;
  std::size_t mayne_samples = 50;
};

/// Shape checks only; build_instance validates the combination.
RunConfig parse_config(const json& j);

/// The algebra, sigma and fixtures a config describes.
struct Instance {
  std::optional<TriangularAlgebra> triangular;
  std::optional<FDAlgebra> plain;
  std::optional<N3Fixture> n3;
  std::optional<TrianAA0Fixture> aa0;
  LinearEndo sigma;
  std::string sigma_name;

  const FDAlgebra& algebra() const;
};

/// Builds the instance and checks every task against it. Throws ConfigError.
Instance build_instance(const RunConfig& config);

}  // namespace trialg
