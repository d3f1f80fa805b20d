#include "hpolar/hpolyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace hpolar {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kIncidenceTol = 1e-8;
constexpr double kMergeTol = 1e-8;

double rel(double tol, const Eigen::Vector3d& a) { return tol * (1.0 + a.norm()); }

// Any unit vector orthogonal to n.
Eigen::Vector3d orthogonal_unit(const Eigen::Vector3d& n) {
  Eigen::Vector3d c = std::abs(n.x()) < 0.7 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  return n.cross(c).normalized();
}

}  // namespace

bool ConvexPolyhedronH3::compact() const {
  for (auto c : vertex_class)
    if (c != VertexClass::Finite) return false;
  return true;
}

ConvexPolyhedronH3 build_from_halfspaces(const std::vector<HalfSpace>& hs) {
  const int m = int(hs.size());
  if (m < 4) throw InvalidInput("build_from_halfspaces: need at least 4 half-spaces");

  const std::size_t msz = std::size_t(m);
  std::vector<Eigen::Vector3d> normals(msz);
  std::vector<double> offsets(msz);
  for (int i = 0; i < m; ++i) {
    normals[std::size_t(i)] = hs[std::size_t(i)].n.v.x;
    offsets[std::size_t(i)] = hs[std::size_t(i)].n.v.x0;
  }

  auto feasible = [&](const Eigen::Vector3d& a) {
    for (int l = 0; l < m; ++l)
      if (a.dot(normals[std::size_t(l)]) > offsets[std::size_t(l)] + rel(kFeasTol, a))
        return false;
    return true;
  };

  ConvexPolyhedronH3 poly;
  poly.halfspaces = hs;

  // Vertex candidates from all plane triples in the chart x0 = 1.
  int skipped_triples = 0;
  std::vector<Eigen::Vector3d> verts;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Eigen::Matrix3d a;
        a.row(0) = normals[std::size_t(i)];
        a.row(1) = normals[std::size_t(j)];
        a.row(2) = normals[std::size_t(k)];
        Eigen::Vector3d d(offsets[std::size_t(i)], offsets[std::size_t(j)], offsets[std::size_t(k)]);
        Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
        if (!lu.isInvertible()) {
          ++skipped_triples;
          continue;
        }
        Eigen::Vector3d x = lu.solve(d);
        if (!x.allFinite() || x.norm() > 1e6) {
          ++skipped_triples;
          continue;
        }
        if (!feasible(x)) continue;
        bool merged = false;
        for (auto& v : verts)
          if ((v - x).norm() <= rel(kMergeTol, x)) {
            merged = true;
            break;
          }
        if (!merged) verts.push_back(x);
      }
  if (skipped_triples > 0)
    poly.notes.push_back("triples at projective infinity or near-singular: " +
                         std::to_string(skipped_triples));

  if (verts.size() < 4)
    throw ConstructionError("degenerate polyhedron: fewer than 4 vertices");

  // Dimension check.
  {
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& v : verts) c += v;
    c /= double(verts.size());
    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (const auto& v : verts) cov += (v - c) * (v - c).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
    if (es.eigenvalues()(0) < 1e-16 * (1.0 + es.eigenvalues()(2)))
      throw ConstructionError("degenerate polyhedron: vertices span less than 3 dimensions");
    bool meets_ball = c.norm() < 1.0 - kFeasTol;
    for (const auto& v : verts) meets_ball = meets_ball || v.norm() < 1.0 - kFeasTol;
    if (!meets_ball)
      throw ConstructionError("degenerate polyhedron: intersection does not meet the Klein ball");
  }

  // Projective unboundedness diagnostic: a nonzero recession direction d with
  // n_l . d <= 0 for all l. Extreme rays of the cone lie on pairs of active
  // constraints; single-normal orthogonals cover the rank-deficient cases.
  {
    std::vector<Eigen::Vector3d> cand;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        Eigen::Vector3d c = normals[std::size_t(i)].cross(normals[std::size_t(j)]);
        if (c.norm() > 1e-12) {
          cand.push_back(c.normalized());
          cand.push_back(-c.normalized());
        }
      }
      Eigen::Vector3d u = orthogonal_unit(normals[std::size_t(i)]);
      Eigen::Vector3d w = normals[std::size_t(i)].cross(u).normalized();
      cand.insert(cand.end(), {u, -u, w, -w});
    }
    for (const auto& d : cand) {
      bool recession = true;
      for (int l = 0; l < m && recession; ++l)
        if (normals[std::size_t(l)].dot(d) > 1e-9) recession = false;
      if (recession) {
        poly.notes.push_back("projectively unbounded: recession direction exists");
        break;
      }
    }
  }

  // Incident planes per vertex.
  std::vector<std::vector<int>> incident(verts.size());
  for (std::size_t vi = 0; vi < verts.size(); ++vi)
    for (int l = 0; l < m; ++l)
      if (std::abs(verts[vi].dot(normals[std::size_t(l)]) - offsets[std::size_t(l)]) <=
          rel(kIncidenceTol, verts[vi]))
        incident[vi].push_back(l);

  // Face cycles: vertices of each supporting plane, ordered counterclockwise as
  // seen from outside (from the direction of the outward Klein normal).
  std::vector<std::vector<int>> face_cycles;
  std::vector<int> face_plane;
  for (int l = 0; l < m; ++l) {
    std::vector<int> fv;
    for (std::size_t vi = 0; vi < verts.size(); ++vi)
      if (std::find(incident[vi].begin(), incident[vi].end(), l) != incident[vi].end())
        fv.push_back(int(vi));
    if (fv.size() < 3) {
      if (!fv.empty())
        poly.notes.push_back("half-space " + std::to_string(l) +
                             " touches the polyhedron in fewer than 3 vertices");
      continue;
    }
    const Eigen::Vector3d nh = normals[std::size_t(l)].normalized();
    const Eigen::Vector3d u = orthogonal_unit(nh);
    const Eigen::Vector3d w = nh.cross(u);
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (int vi : fv) c += verts[std::size_t(vi)];
    c /= double(fv.size());
    std::sort(fv.begin(), fv.end(), [&](int p, int q) {
      const Eigen::Vector3d dp = verts[std::size_t(p)] - c, dq = verts[std::size_t(q)] - c;
      return std::atan2(dp.dot(w), dp.dot(u)) < std::atan2(dq.dot(w), dq.dot(u));
    });
    face_cycles.push_back(std::move(fv));
    face_plane.push_back(l);
  }
  if (face_cycles.size() < 4)
    throw ConstructionError("degenerate polyhedron: fewer than 4 proper faces");

  // Assemble the combinatorial structure. Vertex ids 1..V; edges discovered
  // walking the face cycles.
  AbstractPolyhedron ap;
  for (std::size_t vi = 0; vi < verts.size(); ++vi) ap.vertices.push_back(CellId(vi + 1));

  std::map<std::pair<int, int>, CellId> edge_ids;
  CellId next_edge = 1;
  for (std::size_t fi = 0; fi < face_cycles.size(); ++fi) {
    const auto& cyc = face_cycles[fi];
    FaceRec fr;
    fr.id = CellId(fi + 1);
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      const int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
      const auto key = std::minmax(a, b);
      auto it = edge_ids.find(key);
      if (it == edge_ids.end()) {
        it = edge_ids.emplace(key, next_edge++).first;
        ap.edges.push_back({it->second, CellId(a + 1), CellId(b + 1)});
      }
      const EdgeRec& er = ap.edges[std::size_t(it->second - 1)];
      fr.boundary.push_back({it->second, er.tail == CellId(a + 1) ? +1 : -1});
    }
    ap.faces.push_back(std::move(fr));
  }

  Report rep = validate(ap);
  if (!rep.ok()) {
    std::string why;
    for (const auto& c : rep.conditions)
      if (!c.pass) why += c.name + "; ";
    throw ConstructionError("half-space intersection produced an invalid complex: " + why);
  }

  poly.combinatorics = std::move(ap);
  poly.topo = topology_of(poly.combinatorics);
  poly.vertex_coords = std::move(verts);
  poly.face_halfspace.assign(face_plane.begin(), face_plane.end());
  poly.vertex_class.resize(poly.vertex_coords.size());
  for (std::size_t vi = 0; vi < poly.vertex_coords.size(); ++vi) {
    const double r = poly.vertex_coords[vi].norm();
    poly.vertex_class[vi] = r < 1.0 - kIdealTol    ? VertexClass::Finite
                            : r <= 1.0 + kIdealTol ? VertexClass::Ideal
                                                   : VertexClass::Hyperinfinite;
  }
  return poly;
}

HPoint vertex_hpoint(const ConvexPolyhedronH3& p, int vertex_index) {
  if (p.vertex_class[std::size_t(vertex_index)] != VertexClass::Finite)
    throw InvalidInput("vertex_hpoint: vertex is not finite");
  return from_klein(KleinPoint(p.vertex_coords[std::size_t(vertex_index)]));
}

double dihedral_angle(const ConvexPolyhedronH3& p, CellId edge_id) {
  const int e = p.edge_index(edge_id);
  const auto& ef = p.topo.edge_faces[std::size_t(e)];
  const DSPoint& n1 = p.halfspaces[std::size_t(p.face_halfspace[std::size_t(ef[0].first)])].n;
  const DSPoint& n2 = p.halfspaces[std::size_t(p.face_halfspace[std::size_t(ef[1].first)])].n;
  const double c = -minkowski_inner(n1.v, n2.v);
  if (std::abs(c) >= 1.0 - kStrictTol)
    throw ConstructionError("no dihedral: face planes do not intersect in H^3");
  return std::acos(c);
}

double exterior_dihedral_angle(const ConvexPolyhedronH3& p, CellId edge_id) {
  return M_PI - dihedral_angle(p, edge_id);
}

EdgeLength edge_length(const ConvexPolyhedronH3& p, CellId edge_id) {
  const int e = p.edge_index(edge_id);
  const EdgeRec& er = p.combinatorics.edges[std::size_t(e)];
  const int a = p.vertex_index(er.tail), b = p.vertex_index(er.head);
  const VertexClass ca = p.vertex_class[std::size_t(a)], cb = p.vertex_class[std::size_t(b)];
  if (ca == VertexClass::Hyperinfinite || cb == VertexClass::Hyperinfinite)
    return {LengthKind::Undefined, std::numeric_limits<double>::quiet_NaN()};
  if (ca == VertexClass::Ideal || cb == VertexClass::Ideal)
    return {LengthKind::Infinite, std::numeric_limits<double>::infinity()};
  return {LengthKind::Finite,
          hyperbolic_distance(vertex_hpoint(p, a), vertex_hpoint(p, b))};
}

namespace {

// Tangent at x (on the hyperboloid) pointing toward the projective point with chart
// coordinates a (any vertex class): project the chart representative onto T_x.
Eigen::Vector4d tangent_toward(const MinkowskiVec4& x, const Eigen::Vector3d& a) {
  const MinkowskiVec4 y(1.0, a);
  const MinkowskiVec4 u = y + minkowski_inner(y, x) * x;
  return u.as_vector();
}

double tangent_angle(const Eigen::Vector4d& u, const Eigen::Vector4d& w) {
  auto ip = [](const Eigen::Vector4d& s, const Eigen::Vector4d& t) {
    return -s[0] * t[0] + s[1] * t[1] + s[2] * t[2] + s[3] * t[3];
  };
  const double c = ip(u, w) / std::sqrt(ip(u, u) * ip(w, w));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

double face_angle(const ConvexPolyhedronH3& p, CellId face_id, CellId vertex_id) {
  const int f = p.face_index(face_id);
  const int v = p.vertex_index(vertex_id);
  switch (p.vertex_class[std::size_t(v)]) {
    case VertexClass::Ideal:
      return 0.0;  // horospherical limit
    case VertexClass::Hyperinfinite:
      throw InvalidInput("face_angle: hyperinfinite vertex");
    case VertexClass::Finite:
      break;
  }
  const auto& cyc = p.topo.face_vertices[std::size_t(f)];
  const int n = int(cyc.size());
  int pos = -1;
  for (int k = 0; k < n; ++k)
    if (cyc[std::size_t(k)] == v) pos = k;
  if (pos < 0) throw InvalidInput("face_angle: vertex not incident to face");
  const int prev = cyc[std::size_t((pos + n - 1) % n)];
  const int next = cyc[std::size_t((pos + 1) % n)];
  const MinkowskiVec4 x = vertex_hpoint(p, v).v;
  return tangent_angle(tangent_toward(x, p.vertex_coords[std::size_t(prev)]),
                       tangent_toward(x, p.vertex_coords[std::size_t(next)]));
}

double face_area(const ConvexPolyhedronH3& p, CellId face_id) {
  const int f = p.face_index(face_id);
  const auto& cyc = p.topo.face_vertices[std::size_t(f)];
  for (int v : cyc)
    if (p.vertex_class[std::size_t(v)] != VertexClass::Finite)
      throw InvalidInput("face_area: face is not compact");
  double defect = -2.0 * M_PI;
  for (int v : cyc)
    defect += M_PI - face_angle(p, face_id, p.combinatorics.vertices[std::size_t(v)]);
  return defect;
}

SphericalPolygon vertex_link(const ConvexPolyhedronH3& p, CellId vertex_id) {
  const int v = p.vertex_index(vertex_id);
  if (p.vertex_class[std::size_t(v)] != VertexClass::Finite)
    throw InvalidInput("vertex_link: vertex is not finite");
  const auto& edges = p.topo.edges_around[std::size_t(v)];
  const auto& faces = p.topo.faces_around[std::size_t(v)];
  const std::size_t d = edges.size();
  std::vector<double> sides(d), angles(d);
  for (std::size_t i = 0; i < d; ++i) {
    sides[i] = face_angle(p, p.combinatorics.faces[std::size_t(faces[i])].id, vertex_id);
    angles[i] = dihedral_angle(p, p.combinatorics.edges[std::size_t(edges[i])].id);
  }
  return SphericalPolygon(std::move(sides), std::move(angles));
}

TurningResult total_turning(const std::vector<HPoint>& curve) {
  const int n = int(curve.size());
  if (n < 3) throw InvalidInput("total_turning: need at least 3 points");
  for (int i = 0; i < n; ++i) {
    const double c = -minkowski_inner(curve[std::size_t(i)].v, curve[std::size_t((i + 1) % n)].v);
    if (c < 1.0 + 1e-14) throw InvalidInput("total_turning: repeated consecutive points");
  }
  TurningResult res;
  for (int i = 0; i < n; ++i) {
    const MinkowskiVec4& x = curve[std::size_t(i)].v;
    const MinkowskiVec4& prev = curve[std::size_t((i + n - 1) % n)].v;
    const MinkowskiVec4& next = curve[std::size_t((i + 1) % n)].v;
    auto toward = [&](const MinkowskiVec4& y) {
      const MinkowskiVec4 u = y + minkowski_inner(y, x) * x;
      return u.as_vector();
    };
    const double interior = tangent_angle(toward(prev), toward(next));
    if (interior < 1e-9) res.turnbacks.push_back(i);
    res.total += M_PI - interior;
  }
  return res;
}

ConvexPolyhedronH3 apply_lorentz(const LorentzTransform& a, const ConvexPolyhedronH3& p) {
  std::vector<HalfSpace> hs;
  hs.reserve(p.halfspaces.size());
  for (const auto& h : p.halfspaces) hs.emplace_back(apply_lorentz(a, h.n));
  return build_from_halfspaces(hs);
}

}  // namespace hpolar
