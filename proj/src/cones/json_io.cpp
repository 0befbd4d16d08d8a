#include "entangle/cones/json_io.hpp"

#include <fstream>

namespace entangle::cones {

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

Json to_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InvalidInput("expected a rational string, got " + j.dump());
}

Vec vec_from_json(const Json& j) {
  require(j.is_array(), "expected an array, got " + j.dump());
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from_json(j[i]);
  return v;
}

Mat mat_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "expected a nonempty matrix");
  const std::size_t cols = j[0].size();
  Mat m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vec row = vec_from_json(j[i]);
    if (row.size() != cols) throw DimensionMismatch("ragged matrix in JSON");
    m.set_row(i, row);
  }
  return m;
}

Cone cone_from_json(const Json& j) {
  require(j.is_object(), "cone document must be an object");
  require(j.contains("ambient_dim") && j["ambient_dim"].is_number_integer(), "cone needs ambient_dim");
  require(j.contains("generators") && j["generators"].is_array(), "cone needs generators");
  const long dim = j["ambient_dim"].get<long>();
  require(dim >= 1, "ambient_dim must be positive");
  std::vector<Vec> gens;
  for (const auto& g : j["generators"]) gens.push_back(vec_from_json(g));
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "cone";
  return Cone(name, static_cast<std::size_t>(dim), std::move(gens));
}

Json cone_to_json(const Cone& c) {
  return Json{{"name", c.name()},
              {"ambient_dim", c.dim()},
              {"generators", to_json(c.generators())},
              {"extreme_rays", to_json(c.extreme_rays())},
              {"dual_rays", to_json(c.dual_rays())}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  require(out.good(), "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Cone load_cone(const std::filesystem::path& path) { return cone_from_json(read_json_file(path)); }

}  // namespace entangle::cones
