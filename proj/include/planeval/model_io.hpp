#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "planeval/model.hpp"

namespace planeval {

using Json = nlohmann::json;

// Puiseux-form catalog: {"valuations":[{"kind","n","terms":[[k,num,den]],"trunc":[num,den]}]}.
// The optional boolean "swap" exchanges the coordinates. Errors name the offending field.
std::vector<PuiseuxDatum> valuations_from_json(const Json& doc);
Json valuations_to_json(const std::vector<PuiseuxDatum>& specs);

// Accepts the Puiseux form or the explicit-tree form
// {"tree":{"parents":[...],"satellite":[...]},"valuations":[{"kind","path","weights","resolved"}]}.
CollectionModel model_from_json(const Json& doc);
// Puiseux form when every valuation carries its source datum, tree form otherwise.
Json model_to_json(const CollectionModel& model);
Json model_to_tree_json(const CollectionModel& model);

Json parse_json_text(const std::string& text, const std::string& what);
std::string read_text_file(const std::string& path);
// Writes through a temporary file and a rename.
void write_text_file_atomic(const std::string& path, const std::string& text);

// Stable two-space indented dump ending in a newline.
std::string dump_json(const Json& doc);

}  // namespace planeval
