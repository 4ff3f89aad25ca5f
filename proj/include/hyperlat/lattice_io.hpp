#pragma once

#include <string>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

// JSON lattice documents, schema "hyperlat/lattice/v1". Round trips preserve
// all ids, adjacency and coordinates exactly. Violations raise ConfigError
// carrying the JSON path of the offending element.
std::string serialize(const LayoutGraph& layout);
std::string serialize(const EffectiveLattice& lattice);

LayoutGraph deserialize_layout(const std::string& json_text);
EffectiveLattice deserialize_effective(const std::string& json_text);

}  // namespace hyperlat
