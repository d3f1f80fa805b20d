#pragma once

#include <map>

#include "hpolar/hpolyhedron.hpp"
#include "hpolar/spherical.hpp"

namespace hpolar {

struct Gluing {
  int cell_a = -1, side_a = -1;
  int cell_b = -1, side_b = -1;
};

// Sphere-homeomorphic complex of spherical polygons glued edge to edge. All cells
// are stored counterclockwise (interior on the left of the boundary walk); a gluing
// identifies the two sides reversing direction, so vertex i of side (c, i) matches
// vertex j+1 of side (c', j).
struct ConeMetricSurface {
  std::vector<SphericalPolygon> cells;
  std::vector<Gluing> gluings;

  // Derived at construction.
  std::vector<std::vector<std::pair<int, int>>> glue_of;  // [cell][side] -> (cell, side)
  struct ComplexVertex {
    std::vector<std::pair<int, int>> corners;  // (cell, corner) in rotation order
    double cone_angle = 0.0;
    CellId label = 0;  // face id for Gauss images, 0 otherwise
  };
  std::vector<ComplexVertex> vertices;
  std::vector<std::vector<int>> corner_vertex;  // [cell][corner] -> complex vertex

  // Validates: every side glued exactly once, glued lengths agree within
  // kGluingTol, the complex is connected with Euler characteristic 2.
  ConeMetricSurface(std::vector<SphericalPolygon> cells_in, std::vector<Gluing> gluings_in);

  double side_length(int cell, int side) const {
    return cells[std::size_t(cell)].side_lengths[std::size_t(side)];
  }
  int euler_characteristic() const {
    return int(cells.size()) - int(gluings.size()) + int(vertices.size());
  }
};

// Cone angle (sum of incident interior angles) per complex vertex.
std::vector<double> cone_angles(const ConeMetricSurface& q);

// Complex vertices whose angle differs from 2pi by more than tol.
std::vector<int> cone_points(const ConeMetricSurface& q, double tol = kGluingTol);

// Combinatorial cell complex of the surface as an abstract polyhedron: complex
// vertices get ids v+1, gluings become edges g+1, cells become faces c+1.
AbstractPolyhedron surface_complex(const ConeMetricSurface& q);

// Polar metric G(P): one cell per vertex of P (the spherical polar of its link),
// glued along dual edges. Edge (c, i) has length pi minus the interior dihedral of
// the i-th edge around the vertex; corners carry pi minus the face angles. Complex
// vertices are labelled by the dual face ids. Requires all vertices of P finite or
// ideal; throws for hyperinfinite vertices.
ConeMetricSurface gauss_image(const ConvexPolyhedronH3& p);

}  // namespace hpolar
