#pragma once

#include <json.hpp>

#include "eqloc/character.hpp"
#include "eqloc/local_index.hpp"
#include "eqloc/polytope.hpp"
#include "eqloc/reduction.hpp"
#include "eqloc/spectral_model.hpp"

namespace eqloc {

using nlohmann::json;

// {"rank": n, "terms": [{"weight": [...], "mult": m}, ...]}, weights in
// lexicographic order. Multiplicities beyond 64 bits are written as strings.
json to_json(const Character& c);
Character character_from_json(const json& j);

// {"dim": n, "facets": [{"normal": [...], "offset": c}, ...]}
json to_json(const DelzantPolytope& p);
DelzantPolytope polytope_from_json(const json& j);

json to_json(const LevelComponent& comp);
json to_json(const LocalIndexReport& report);
json to_json(const ReductionRow& row);
json to_json(const spectral::ModeKernelResult& r);

}  // namespace eqloc
