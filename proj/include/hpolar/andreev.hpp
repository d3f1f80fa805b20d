#pragma once

#include <map>

#include "hpolar/abstract_poly.hpp"
#include "hpolar/cone_metric.hpp"

namespace hpolar {

// Interior dihedral angle per edge of the target polyhedron.
struct AngleAssignment {
  std::map<CellId, double> angles;
};

// Circular sequence of k edge-adjacent faces, no three of which share a vertex.
struct PrismaticElement {
  std::vector<CellId> faces;
  std::vector<CellId> edges;  // edges[i] joins faces[i] and faces[i+1]
};

// Exhaustive list for k in {3, 4}, canonicalized up to rotation and reflection.
std::vector<PrismaticElement> prismatic_elements(const AbstractPolyhedron& p, int k);

// Andreev conditions for a compact polyhedron with dihedral angles <= pi/2:
//   trivalent, angle-range, vertex-sums, prismatic-3, prismatic-4,
//   dual-configuration (condition 5, checked in its dual form).
// Accept = all conditions pass. Throws InvalidInput for a simplex.
Report check_andreev(const AbstractPolyhedron& p, const AngleAssignment& a);

// Dual Andreev metric: one spherical triangle per vertex of P, with side pi - alpha
// on each incident edge, glued along the Poincare-dual combinatorics. Requires
// trivalence and the angle range; throws ConstructionError when a side triple is
// not a spherical triangle.
ConeMetricSurface dual_andreev_metric(const AbstractPolyhedron& p, const AngleAssignment& a);

// Dual conditions on a triangulated cone metric with sides in [pi/2, pi):
//   1*: triangulation by convex spherical triangles with sides in [pi/2, pi)
//   2*: geodesic 1-skeleton cycles of three or four edges are longer than 2pi
//   3*: no vertex whose star is four triangles with opposite sides of length pi/2
Report check_dual_andreev(const ConeMetricSurface& q);

}  // namespace hpolar
