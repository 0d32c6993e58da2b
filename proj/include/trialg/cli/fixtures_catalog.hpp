#pragma once

#include <optional>
#include <string>

#include "trialg/cli/json_codec.hpp"

namespace trialg {

/// Description of the built-in fixtures with their maps and checked claims.
/// With a name, only that fixture; throws InvalidParameter for unknown names.
json list_fixtures(const std::optional<std::string>& name = std::nullopt);

}  // namespace trialg
