#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "svtakagi/exactgeom/polyhedron.hpp"

namespace svtakagi::exactgeom {

using Json = nlohmann::ordered_json;

/// Rejects any key of `obj` outside `allowed`.
inline void require_fields(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || item.key() == a;
    if (!known) throw ParseError(where + ": unknown field \"" + item.key() + "\"");
  }
}

inline const Json& field(const Json& obj, const char* name, const std::string& where) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const Rational& q) { return q.get_str(); }

inline RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array of rational strings");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return RationalVector(std::move(coords));
}

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.get_str());
  return a;
}

inline std::size_t dim_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw ParseError(where + ": dim must be a positive integer");
  return j.get<std::size_t>();
}

inline std::vector<RationalVector> vectors_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of vectors");
  std::vector<RationalVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

inline Polyhedron polyhedron_from_json(const Json& j) {
  require_fields(j, {"dim", "vertices", "rays"}, "polyhedron");
  const auto dim = dim_from_json(field(j, "dim", "polyhedron"), "polyhedron");
  auto vertices = vectors_from_json(field(j, "vertices", "polyhedron"), "polyhedron vertices");
  std::vector<RationalVector> rays;
  if (j.contains("rays")) rays = vectors_from_json(j["rays"], "polyhedron rays");
  try {
    return Polyhedron(dim, std::move(vertices), std::move(rays));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("polyhedron: ") + e.what());
  }
}

inline Json to_json(const Polyhedron& P) {
  Json j;
  j["dim"] = P.dim();
  j["vertices"] = Json::array();
  for (const auto& v : P.vertices()) j["vertices"].push_back(to_json(v));
  j["rays"] = Json::array();
  for (const auto& r : P.rays()) j["rays"].push_back(to_json(r));
  return j;
}

inline Cone cone_from_json(const Json& j) {
  require_fields(j, {"dim", "rays"}, "cone");
  const auto dim = dim_from_json(field(j, "dim", "cone"), "cone");
  std::vector<RationalVector> rays;
  if (j.contains("rays")) rays = vectors_from_json(j["rays"], "cone rays");
  try {
    return Cone(dim, std::move(rays));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cone: ") + e.what());
  }
}

inline Json to_json(const Cone& K) {
  Json j;
  j["dim"] = K.dim();
  j["rays"] = Json::array();
  for (const auto& r : K.rays()) j["rays"].push_back(to_json(r));
  return j;
}

}  // namespace svtakagi::exactgeom
