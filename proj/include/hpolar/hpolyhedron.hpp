#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hpolar/abstract_poly.hpp"
#include "hpolar/models.hpp"
#include "hpolar/spherical.hpp"

namespace hpolar {

// Oriented half-space {x in H^3 : <x, n> <= 0} with outward unit normal n.
struct HalfSpace {
  DSPoint n;
  explicit HalfSpace(DSPoint normal) : n(std::move(normal)) {}
};

enum class VertexClass { Finite, Ideal, Hyperinfinite };

enum class LengthKind { Finite, Infinite, Undefined };

struct EdgeLength {
  LengthKind kind = LengthKind::Finite;
  double value = 0.0;  // +infinity for Infinite, NaN for Undefined
};

// Convex polyhedron in H^3 with derived incidence structure. Vertex coordinates are
// kept in the projective chart x0 = 1 (Klein coordinates); they may lie on or beyond
// the unit sphere for ideal and hyperinfinite vertices.
struct ConvexPolyhedronH3 {
  std::vector<HalfSpace> halfspaces;
  AbstractPolyhedron combinatorics;  // vertex ids 1..V, edge ids 1..E, face ids 1..F
  Topology topo;
  std::vector<Eigen::Vector3d> vertex_coords;  // by vertex index
  std::vector<VertexClass> vertex_class;       // by vertex index
  std::vector<int> face_halfspace;             // face index -> halfspace index
  std::vector<std::string> notes;              // non-fatal diagnostics

  int vertex_index(CellId id) const { return topo.vindex.at(id); }
  int edge_index(CellId id) const { return topo.eindex.at(id); }
  int face_index(CellId id) const { return topo.findex.at(id); }
  bool compact() const;
};

// Enumerates vertices by exhaustive normal-triple intersection with feasibility
// filtering, extracts faces and edges, classifies vertices. Throws
// ConstructionError for empty or lower-dimensional intersections; configurations
// that are unbounded in the projective chart are reported in notes, not fatal.
ConvexPolyhedronH3 build_from_halfspaces(const std::vector<HalfSpace>& hs);

// Interior dihedral angle at an edge: cos(theta) = -<n1, n2> for the outward
// normals of the two adjacent faces. Throws when the face planes do not meet in H^3.
double dihedral_angle(const ConvexPolyhedronH3& p, CellId edge_id);
double exterior_dihedral_angle(const ConvexPolyhedronH3& p, CellId edge_id);

EdgeLength edge_length(const ConvexPolyhedronH3& p, CellId edge_id);

// Hyperbolic angle of the face at the vertex; 0 at ideal vertices by convention,
// throws for hyperinfinite vertices.
double face_angle(const ConvexPolyhedronH3& p, CellId face_id, CellId vertex_id);

// Angle-defect area of a compact face: sum(pi - theta_i) - 2pi.
double face_area(const ConvexPolyhedronH3& p, CellId face_id);

// Link of a finite vertex: spherical polygon whose sides are the face angles at the
// vertex and whose interior angles are the interior dihedral angles of its edges.
SphericalPolygon vertex_link(const ConvexPolyhedronH3& p, CellId vertex_id);

struct TurningResult {
  double total = 0.0;
  std::vector<int> turnbacks;  // vertices where the curve doubles back on itself
  bool degenerate() const { return !turnbacks.empty(); }
};

// Sum of exterior angles of a closed polygonal curve given by >= 3 distinct
// consecutive points. Throws on repeated consecutive points.
TurningResult total_turning(const std::vector<HPoint>& curve);

ConvexPolyhedronH3 apply_lorentz(const LorentzTransform& a, const ConvexPolyhedronH3& p);

// Hyperboloid representative of a finite vertex.
HPoint vertex_hpoint(const ConvexPolyhedronH3& p, int vertex_index);

}  // namespace hpolar
