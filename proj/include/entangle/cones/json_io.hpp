#pragma once

#include <filesystem>

#include "json.hpp"
#include "entangle/cones/cone.hpp"

namespace entangle::cones {

using Json = nlohmann::json;

/// Rationals are written as "p/q" strings; integers are accepted on input.
Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const std::vector<Vec>& vs);

Rat rat_from_json(const Json& j);
Vec vec_from_json(const Json& j);
Mat mat_from_json(const Json& j);

/// {"name", "ambient_dim", "generators"}. Throws InvalidInput on malformed documents.
Cone cone_from_json(const Json& j);
/// Full description including the derived extreme and dual rays.
Json cone_to_json(const Cone& c);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
Cone load_cone(const std::filesystem::path& path);

}  // namespace entangle::cones
