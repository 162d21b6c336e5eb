#pragma once

#include <string>

#include "json.hpp"

#include "decidua/fin_obj.hpp"
#include "decidua/pmap.hpp"

namespace decidua {

// Wire format for objects and maps.
//
//   object:  {"form": "empty"|"unit"|"atom"|"sum", "elems": [...],
//             "left": <object>?, "right": <object>?}
//   map:     {"dom": <object>, "cod": <object>, "map": {"x": "y", ...}}
//
// Parsing is strict: unknown keys are rejected, sums must carry both
// summands, and an explicit "elems" list on a sum must match the derived
// tagged elements. Writers always emit the full element list.

nlohmann::json obj_to_json(const FinObj& x);
FinObj obj_from_json(const nlohmann::json& j);

nlohmann::json pmap_to_json(const PMap& f);
PMap pmap_from_json(const nlohmann::json& j);

PMap pmap_from_json_text(const std::string& text);
PMap load_pmap_file(const std::string& path);

}  // namespace decidua
