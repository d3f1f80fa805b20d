#include "hpolar/json_io.hpp"

namespace hpolar {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput("schema error at " + where + ": " + what);
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  return j.get<double>();
}

CellId id_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer id");
  return j.get<CellId>();
}

}  // namespace

json to_json(const AbstractPolyhedron& p) {
  json j;
  j["vertices"] = json::array();
  for (CellId v : p.vertices) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (const auto& e : p.edges)
    j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  j["faces"] = json::array();
  for (const auto& f : p.faces) {
    json boundary = json::array();
    for (const auto& s : f.boundary) boundary.push_back(s.sign > 0 ? s.edge : -s.edge);
    j["faces"].push_back({{"id", f.id}, {"boundary", boundary}});
  }
  return j;
}

AbstractPolyhedron polyhedron_from_json(const json& j) {
  AbstractPolyhedron p;
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("faces"))
    bad("$", "expected an object with vertices, edges and faces");
  for (const auto& v : j.at("vertices")) p.vertices.push_back(id_at(v, "vertices[]"));
  for (const auto& e : j.at("edges")) {
    if (!e.is_object()) bad("edges[]", "expected {id, tail, head}");
    EdgeRec r{id_at(e.at("id"), "edges[].id"), id_at(e.at("tail"), "edges[].tail"),
              id_at(e.at("head"), "edges[].head")};
    if (r.id <= 0) bad("edges[].id", "edge ids must be positive");
    p.edges.push_back(r);
  }
  for (const auto& f : j.at("faces")) {
    if (!f.is_object()) bad("faces[]", "expected {id, boundary}");
    FaceRec r;
    r.id = id_at(f.at("id"), "faces[].id");
    for (const auto& s : f.at("boundary")) {
      const CellId signed_edge = id_at(s, "faces[].boundary[]");
      if (signed_edge == 0) bad("faces[].boundary[]", "signed edge id must be nonzero");
      r.boundary.push_back({signed_edge > 0 ? signed_edge : -signed_edge,
                            signed_edge > 0 ? +1 : -1});
    }
    p.faces.push_back(std::move(r));
  }
  return p;
}

json to_json(const std::vector<HalfSpace>& hs) {
  json j = json::array();
  for (const auto& h : hs)
    j.push_back({{"n0", h.n.v.x0},
                 {"n1", h.n.v.x.x()},
                 {"n2", h.n.v.x.y()},
                 {"n3", h.n.v.x.z()}});
  return j;
}

std::vector<HalfSpace> halfspaces_from_json(const json& j) {
  if (!j.is_array()) bad("$", "expected an array of half-spaces");
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& h = j[i];
    const std::string where = "[" + std::to_string(i) + "]";
    if (!h.is_object()) bad(where, "expected {n0, n1, n2, n3}");
    const MinkowskiVec4 v(number_at(h.at("n0"), where + ".n0"),
                          number_at(h.at("n1"), where + ".n1"),
                          number_at(h.at("n2"), where + ".n2"),
                          number_at(h.at("n3"), where + ".n3"));
    try {
      hs.emplace_back(DSPoint::projective(v));
    } catch (const InvalidInput& e) {
      bad(where, e.what());
    }
  }
  return hs;
}

json to_json(const ConeMetricSurface& q) {
  json j;
  j["cells"] = json::array();
  for (const auto& c : q.cells)
    j["cells"].push_back({{"sides", c.side_lengths}, {"angles", c.interior_angles}});
  j["gluings"] = json::array();
  for (const auto& g : q.gluings)
    j["gluings"].push_back({g.cell_a, g.side_a, g.cell_b, g.side_b});
  return j;
}

ConeMetricSurface cone_metric_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.contains("gluings"))
    bad("$", "expected an object with cells and gluings");
  std::vector<SphericalPolygon> cells;
  for (std::size_t i = 0; i < j.at("cells").size(); ++i) {
    const auto& c = j.at("cells")[i];
    const std::string where = "cells[" + std::to_string(i) + "]";
    if (!c.is_object() || !c.contains("sides") || !c.contains("angles"))
      bad(where, "expected {sides, angles}");
    std::vector<double> sides, angles;
    for (const auto& s : c.at("sides")) sides.push_back(number_at(s, where + ".sides[]"));
    for (const auto& a : c.at("angles")) angles.push_back(number_at(a, where + ".angles[]"));
    try {
      cells.emplace_back(std::move(sides), std::move(angles));
    } catch (const InvalidInput& e) {
      bad(where, e.what());
    }
  }
  std::vector<Gluing> gluings;
  for (std::size_t i = 0; i < j.at("gluings").size(); ++i) {
    const auto& g = j.at("gluings")[i];
    const std::string where = "gluings[" + std::to_string(i) + "]";
    if (!g.is_array() || g.size() != 4) bad(where, "expected [cell, side, cell, side]");
    gluings.push_back({int(id_at(g[0], where)), int(id_at(g[1], where)),
                       int(id_at(g[2], where)), int(id_at(g[3], where))});
  }
  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

json to_json(const AngleAssignment& a) {
  json j = json::object();
  for (const auto& [edge, angle] : a.angles) j[std::to_string(edge)] = angle;
  return j;
}

AngleAssignment angles_from_json(const json& j) {
  if (!j.is_object()) bad("$", "expected {\"edge-id\": radians}");
  AngleAssignment a;
  for (const auto& [key, value] : j.items()) {
    CellId id = 0;
    try {
      id = std::stoll(key);
    } catch (...) {
      bad(key, "key is not an integer edge id");
    }
    a.angles[id] = number_at(value, key);
  }
  return a;
}

json to_json(const Report& rep) {
  json conditions = json::array();
  for (const auto& c : rep.conditions) {
    json e = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    conditions.push_back(e);
  }
  return conditions;
}

}  // namespace hpolar
