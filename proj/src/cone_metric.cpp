#include "hpolar/cone_metric.hpp"

#include <cmath>
#include <queue>
#include <set>

namespace hpolar {

ConeMetricSurface::ConeMetricSurface(std::vector<SphericalPolygon> cells_in,
                                     std::vector<Gluing> gluings_in)
    : cells(std::move(cells_in)), gluings(std::move(gluings_in)) {
  if (cells.empty()) throw InvalidInput("ConeMetricSurface: no cells");

  glue_of.resize(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    glue_of[c].assign(cells[c].size(), {-1, -1});

  auto check_side = [&](int c, int s) {
    if (c < 0 || c >= int(cells.size()) || s < 0 || s >= int(cells[std::size_t(c)].size()))
      throw InvalidInput("ConeMetricSurface: gluing references a missing side");
  };
  for (const auto& g : gluings) {
    check_side(g.cell_a, g.side_a);
    check_side(g.cell_b, g.side_b);
    if (g.cell_a == g.cell_b && g.side_a == g.side_b)
      throw InvalidInput("ConeMetricSurface: side glued to itself");
    auto& a = glue_of[std::size_t(g.cell_a)][std::size_t(g.side_a)];
    auto& b = glue_of[std::size_t(g.cell_b)][std::size_t(g.side_b)];
    if (a.first != -1 || b.first != -1)
      throw InvalidInput("ConeMetricSurface: side glued twice");
    a = {g.cell_b, g.side_b};
    b = {g.cell_a, g.side_a};
    const double la = side_length(g.cell_a, g.side_a);
    const double lb = side_length(g.cell_b, g.side_b);
    if (std::abs(la - lb) > kGluingTol)
      throw ConstructionError("ConeMetricSurface: glued side lengths differ beyond tolerance");
  }
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (const auto& [oc, os] : glue_of[c])
      if (oc == -1) throw InvalidInput("ConeMetricSurface: unglued side");

  // Complex vertices: orbits of corners under "cross the side at the corner".
  corner_vertex.resize(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    corner_vertex[c].assign(cells[c].size(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::size_t k = 0; k < cells[c].size(); ++k) {
      if (corner_vertex[c][k] != -1) continue;
      ComplexVertex cv;
      int cc = int(c), ck = int(k);
      do {
        corner_vertex[std::size_t(cc)][std::size_t(ck)] = int(vertices.size());
        cv.corners.emplace_back(cc, ck);
        cv.cone_angle += cells[std::size_t(cc)].interior_angles[std::size_t(ck)];
        const auto [oc, os] = glue_of[std::size_t(cc)][std::size_t(ck)];
        cc = oc;
        ck = (os + 1) % int(cells[std::size_t(oc)].size());
      } while (!(cc == int(c) && ck == int(k)));
      vertices.push_back(std::move(cv));
    }
  }

  // Connectivity and sphere topology.
  std::vector<char> seen(cells.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 0;
  while (!q.empty()) {
    const int c = q.front();
    q.pop();
    ++count;
    for (const auto& [oc, os] : glue_of[std::size_t(c)])
      if (!seen[std::size_t(oc)]) {
        seen[std::size_t(oc)] = 1;
        q.push(oc);
      }
  }
  if (count != int(cells.size()))
    throw ConstructionError("ConeMetricSurface: complex is not connected");
  if (euler_characteristic() != 2)
    throw ConstructionError("ConeMetricSurface: Euler characteristic is " +
                            std::to_string(euler_characteristic()) + ", not 2");
}

std::vector<double> cone_angles(const ConeMetricSurface& q) {
  std::vector<double> a;
  a.reserve(q.vertices.size());
  for (const auto& v : q.vertices) a.push_back(v.cone_angle);
  return a;
}

std::vector<int> cone_points(const ConeMetricSurface& q, double tol) {
  std::vector<int> pts;
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    if (std::abs(q.vertices[i].cone_angle - 2.0 * M_PI) > tol) pts.push_back(int(i));
  return pts;
}

AbstractPolyhedron surface_complex(const ConeMetricSurface& q) {
  AbstractPolyhedron ap;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) ap.vertices.push_back(CellId(v + 1));
  for (std::size_t g = 0; g < q.gluings.size(); ++g) {
    const int c = q.gluings[g].cell_a, s = q.gluings[g].side_a;
    const int n = int(q.cells[std::size_t(c)].size());
    const int a = q.corner_vertex[std::size_t(c)][std::size_t(s)];
    const int b = q.corner_vertex[std::size_t(c)][std::size_t((s + 1) % n)];
    ap.edges.push_back({CellId(g + 1), CellId(a + 1), CellId(b + 1)});
  }
  std::map<std::pair<int, int>, std::pair<int, int>> side_gluing;  // (cell, side) -> (g, sign)
  for (std::size_t g = 0; g < q.gluings.size(); ++g) {
    side_gluing[{q.gluings[g].cell_a, q.gluings[g].side_a}] = {int(g), +1};
    side_gluing[{q.gluings[g].cell_b, q.gluings[g].side_b}] = {int(g), -1};
  }
  for (std::size_t c = 0; c < q.cells.size(); ++c) {
    FaceRec fr;
    fr.id = CellId(c + 1);
    for (std::size_t s = 0; s < q.cells[c].size(); ++s) {
      const auto [g, sign] = side_gluing.at({int(c), int(s)});
      fr.boundary.push_back({CellId(g + 1), sign});
    }
    ap.faces.push_back(std::move(fr));
  }
  return ap;
}

ConeMetricSurface gauss_image(const ConvexPolyhedronH3& p) {
  for (auto c : p.vertex_class)
    if (c == VertexClass::Hyperinfinite)
      throw InvalidInput("gauss_image: hyperinfinite vertices are unsupported");

  const std::size_t nv = p.combinatorics.vertices.size();
  std::vector<SphericalPolygon> cells;
  cells.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const CellId vid = p.combinatorics.vertices[v];
    const auto& edges = p.topo.edges_around[v];
    const auto& faces = p.topo.faces_around[v];
    const std::size_t d = edges.size();
    std::vector<double> sides(d), angles(d);
    for (std::size_t i = 0; i < d; ++i) {
      sides[i] = M_PI - dihedral_angle(p, p.combinatorics.edges[std::size_t(edges[i])].id);
      // Corner i sits between sides i-1 and i: the face between those edges.
      const int f = faces[(i + d - 1) % d];
      angles[i] = M_PI - face_angle(p, p.combinatorics.faces[std::size_t(f)].id, vid);
    }
    cells.emplace_back(std::move(sides), std::move(angles));
  }

  // One gluing per polyhedron edge.
  std::vector<Gluing> gluings;
  for (std::size_t e = 0; e < p.combinatorics.edges.size(); ++e) {
    const int t = p.topo.vindex.at(p.combinatorics.edges[e].tail);
    const int h = p.topo.vindex.at(p.combinatorics.edges[e].head);
    auto position = [&](int v) {
      const auto& edges = p.topo.edges_around[std::size_t(v)];
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == int(e)) return int(i);
      throw ConstructionError("gauss_image: edge missing from vertex rotation");
    };
    gluings.push_back({t, position(t), h, position(h)});
  }

  ConeMetricSurface q(std::move(cells), std::move(gluings));

  // Complex vertices correspond to faces of P; label them and verify the
  // correspondence is single-valued.
  for (auto& cv : q.vertices) {
    CellId label = 0;
    for (const auto& [c, k] : cv.corners) {
      const auto& faces = p.topo.faces_around[std::size_t(c)];
      const std::size_t d = faces.size();
      const int f = faces[(std::size_t(k) + d - 1) % d];
      const CellId fid = p.combinatorics.faces[std::size_t(f)].id;
      if (label == 0) label = fid;
      if (label != fid)
        throw ConstructionError("gauss_image: cone point corners span several faces");
    }
    cv.label = label;
  }
  if (q.vertices.size() != p.combinatorics.faces.size())
    throw ConstructionError("gauss_image: cone point count differs from face count");
  return q;
}

}  // namespace hpolar
