#pragma once

// JSON documents for drawings and arc families. Coordinates are exact
// rationals written as reduced "p/q" strings.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgraph/drawing.hpp"
#include "tgraph/fixtures.hpp"

namespace tgraph {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

namespace detail {

inline Json point_json(const Point& p) { return Json::array({format_scalar(p.x), format_scalar(p.y)}); }

inline Point point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw Error(ErrorCode::Parse, "a point is a pair of rational strings");
  }
  return {parse_scalar(j[0].get<std::string>()), parse_scalar(j[1].get<std::string>())};
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::int64_t id_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

inline std::string string_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline void check_version(const Json& j) {
  if (id_from(j, "version") != kDocumentVersion) throw Error(ErrorCode::Parse, "unsupported document version");
}

inline Json polyline_json(const Polyline& arc) {
  Json a = Json::array();
  for (const Point& p : arc) a.push_back(point_json(p));
  return a;
}

inline Polyline polyline_from(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "an arc is an array of points");
  Polyline arc;
  for (const Json& p : j) arc.push_back(point_from(p));
  if (arc.size() < 2) throw Error(ErrorCode::Parse, "an arc needs at least two points");
  return arc;
}

}  // namespace detail

/// Edge "points" hold the bends only; the ends come from the vertices.
inline Json drawing_to_json(const Drawing& d) {
  Json j;
  j["version"] = kDocumentVersion;
  j["vertices"] = Json::array();
  for (const auto& [id, p] : d.vertices) {
    j["vertices"].push_back({{"id", id}, {"x", format_scalar(p.x)}, {"y", format_scalar(p.y)}});
  }
  j["edges"] = Json::array();
  for (const auto& [id, e] : d.edges) {
    Json bends = Json::array();
    for (std::size_t i = 1; i + 1 < e.arc.size(); ++i) bends.push_back(detail::point_json(e.arc[i]));
    j["edges"].push_back({{"id", id}, {"tail", e.tail}, {"head", e.head}, {"points", bends}});
  }
  if (!d.bipartition.empty()) {
    j["bipartition"] = Json::array();
    for (const auto& [id, side] : d.bipartition) {
      j["bipartition"].push_back({{"id", id}, {"side", side == Side::A ? "A" : "B"}});
    }
  }
  return j;
}

inline Drawing drawing_from_json(const Json& j) {
  detail::check_version(j);
  Drawing d;
  const Json& vertices = detail::field(j, "vertices");
  if (!vertices.is_array()) throw Error(ErrorCode::Parse, "'vertices' must be an array");
  for (const Json& v : vertices) {
    VertexId id = detail::id_from(v, "id");
    Point p{parse_scalar(detail::string_from(v, "x")), parse_scalar(detail::string_from(v, "y"))};
    if (!d.vertices.emplace(id, p).second) throw Error(ErrorCode::Parse, "duplicate vertex id " + std::to_string(id));
  }
  const Json& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw Error(ErrorCode::Parse, "'edges' must be an array");
  for (const Json& e : edges) {
    EdgeId id = detail::id_from(e, "id");
    VertexId tail = detail::id_from(e, "tail");
    VertexId head = detail::id_from(e, "head");
    if (!d.vertices.count(tail) || !d.vertices.count(head)) {
      throw Error(ErrorCode::Parse, "edge " + std::to_string(id) + " names an unknown vertex");
    }
    Polyline arc{d.vertices.at(tail)};
    const Json& points = detail::field(e, "points");
    if (!points.is_array()) throw Error(ErrorCode::Parse, "'points' must be an array");
    for (const Json& p : points) arc.push_back(detail::point_from(p));
    arc.push_back(d.vertices.at(head));
    if (!d.edges.emplace(id, Edge{tail, head, arc}).second) {
      throw Error(ErrorCode::Parse, "duplicate edge id " + std::to_string(id));
    }
  }
  if (j.contains("bipartition")) {
    const Json& labels = j.at("bipartition");
    if (!labels.is_array()) throw Error(ErrorCode::Parse, "'bipartition' must be an array");
    for (const Json& l : labels) {
      VertexId id = detail::id_from(l, "id");
      std::string side = detail::string_from(l, "side");
      if (side != "A" && side != "B") throw Error(ErrorCode::Parse, "side must be \"A\" or \"B\"");
      if (!d.vertices.count(id)) throw Error(ErrorCode::Parse, "label for unknown vertex " + std::to_string(id));
      d.bipartition[id] = side == "A" ? Side::A : Side::B;
    }
  }
  return d;
}

/// Canonical text: ids ascending, rationals reduced, two-space indent.
inline std::string serialize_drawing(const Drawing& d) { return drawing_to_json(d).dump(2) + "\n"; }

inline Drawing parse_drawing(const std::string& text) { return drawing_from_json(detail::parse_text(text)); }

inline Json families_to_json(const ArcFamilies& f) {
  Json j;
  j["version"] = kDocumentVersion;
  for (const char* key : {"l1", "l2"}) {
    const auto& family = std::string(key) == "l1" ? f.l1 : f.l2;
    j[key] = Json::array();
    for (const Polyline& arc : family) j[key].push_back(detail::polyline_json(arc));
  }
  return j;
}

inline ArcFamilies families_from_json(const Json& j) {
  detail::check_version(j);
  ArcFamilies f;
  for (const char* key : {"l1", "l2"}) {
    const Json& family = detail::field(j, key);
    if (!family.is_array()) throw Error(ErrorCode::Parse, std::string("'") + key + "' must be an array");
    auto& out = std::string(key) == "l1" ? f.l1 : f.l2;
    for (const Json& arc : family) out.push_back(detail::polyline_from(arc));
  }
  return f;
}

inline std::string serialize_families(const ArcFamilies& f) { return families_to_json(f).dump(2) + "\n"; }

inline ArcFamilies parse_families(const std::string& text) { return families_from_json(detail::parse_text(text)); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

}  // namespace tgraph
