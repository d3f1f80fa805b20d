#pragma once

#include "hpolar/hpolyhedron.hpp"

namespace hpolar::catalog {

// Half-space families in the Klein chart. Offsets are Euclidean plane distances
// from the chart origin; the finite/ideal/hyperinfinite character of the vertices
// depends on the parameter as noted.

// Regular tetrahedron, faces at offset r along the four (1,1,1)-type directions.
// Vertices sit at Klein radius 3r: compact for r < 1/3.
std::vector<HalfSpace> tetrahedron_halfspaces(double r = 0.25);

// Coordinate cube, planes x_i = +-s. Vertices at radius s*sqrt(3): compact for
// s < 1/sqrt(3), ideal at s = 1/sqrt(3), hyperinfinite beyond.
std::vector<HalfSpace> hexahedron_halfspaces(double s = 0.45);

// Octahedron, planes (+-1,+-1,+-1).a = s*sqrt(3). Vertices at radius s*sqrt(3).
std::vector<HalfSpace> octahedron_halfspaces(double s = 0.45);

// Triangular prism: top/bottom z = +-s and three side planes at offset s.
std::vector<HalfSpace> triangular_prism_halfspaces(double s = 0.3);

// Ideal octahedron with the six ideal vertices (+-1,0,0), (0,+-1,0), (0,0,+-1).
std::vector<HalfSpace> ideal_octahedron_halfspaces();

// Compact right-angled dodecahedron (all interior dihedral angles pi/2).
std::vector<HalfSpace> right_angled_dodecahedron_halfspaces();

// Combinatorial solids derived from the geometric builders.
AbstractPolyhedron tetrahedron();
AbstractPolyhedron cube();
AbstractPolyhedron octahedron();
AbstractPolyhedron triangular_prism();
AbstractPolyhedron dodecahedron();

}  // namespace hpolar::catalog
