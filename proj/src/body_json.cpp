// JSON descriptors for convex bodies. Kept apart from the geometry so the
// library core never touches the parser.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "udg/convex.hpp"

namespace udg {

namespace {

using nlohmann::json;

Vec vec_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string("body json: ") + what +
                                " must be a nonempty array of numbers");
  std::vector<double> xs;
  xs.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number())
      throw std::invalid_argument(std::string("body json: ") + what +
                                  " must contain only numbers");
    xs.push_back(e.get<double>());
  }
  return Vec(std::move(xs));
}

std::vector<Point> points_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string("body json: ") + what +
                                " must be a nonempty array of points");
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (const auto& e : j) pts.push_back(vec_from(e, what));
  return pts;
}

std::optional<Placement> placement_from(const json& j, std::size_t d) {
  const bool has_t = j.contains("translate");
  const bool has_r = j.contains("rotate");
  if (!has_t && !has_r) return std::nullopt;

  Placement pl;
  pl.translation = has_t ? vec_from(j.at("translate"), "translate") : Vec(d);
  if (has_r) {
    const json& rot = j.at("rotate");
    if (!rot.is_array())
      throw std::invalid_argument("body json: rotate must be a matrix");
    for (const auto& row : rot)
      pl.rotation.push_back(vec_from(row, "rotate row").c);
  } else {
    pl.rotation.assign(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) pl.rotation[i][i] = 1.0;
  }
  return pl;
}

}  // namespace

ConvexBody parse_body(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("body json: parse error: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("body json: expected an object with a type");
  const std::string type = j.at("type").get<std::string>();

  if (type == "hyperrectangle") {
    Hyperrectangle h{vec_from(j.at("l"), "l").c};
    const std::size_t d = h.side_lengths.size();
    return ConvexBody(std::move(h), placement_from(j, d));
  }
  if (type == "simplex") {
    Simplex s{points_from(j.at("vertices"), "vertices")};
    const std::size_t d = s.vertices[0].dim();
    return ConvexBody(std::move(s), placement_from(j, d));
  }
  if (type == "vpolytope") {
    VPolytope v{points_from(j.at("vertices"), "vertices")};
    const std::size_t d = v.vertices[0].dim();
    return ConvexBody(std::move(v), placement_from(j, d));
  }
  throw std::invalid_argument("body json: unknown type \"" + type + "\"");
}

std::string body_to_json(const ConvexBody& body) {
  json j;
  if (const auto* h = body.as_hyperrectangle()) {
    j["type"] = "hyperrectangle";
    j["l"] = h->side_lengths;
  } else if (const auto* s = body.as_simplex()) {
    j["type"] = "simplex";
    json verts = json::array();
    for (const Point& p : s->vertices) verts.push_back(p.c);
    j["vertices"] = std::move(verts);
  } else {
    j["type"] = "vpolytope";
    json verts = json::array();
    for (const Point& p : body.as_vpolytope()->vertices) verts.push_back(p.c);
    j["vertices"] = std::move(verts);
  }
  if (body.placement()) {
    j["translate"] = body.placement()->translation.c;
    j["rotate"] = body.placement()->rotation;
  }
  return j.dump();
}

}  // namespace udg
