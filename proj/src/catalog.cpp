#include "hpolar/catalog.hpp"

#include <cmath>

namespace hpolar::catalog {

namespace {

HalfSpace plane(const Eigen::Vector3d& direction, double offset) {
  const Eigen::Vector3d d = direction.normalized();
  const double scale = 1.0 / std::sqrt(1.0 - offset * offset);
  return HalfSpace(DSPoint(MinkowskiVec4(offset * scale, d * scale)));
}

}  // namespace

std::vector<HalfSpace> tetrahedron_halfspaces(double r) {
  if (!(r > 0.0 && r < 1.0 / 3.0))
    throw InvalidInput("tetrahedron_halfspaces: need 0 < r < 1/3 for a compact solid");
  const double s = 1.0 / std::sqrt(3.0);
  return {plane({s, s, s}, r), plane({s, -s, -s}, r), plane({-s, s, -s}, r),
          plane({-s, -s, s}, r)};
}

std::vector<HalfSpace> hexahedron_halfspaces(double s) {
  if (!(s > 0.0 && s < 1.0)) throw InvalidInput("hexahedron_halfspaces: need 0 < s < 1");
  std::vector<HalfSpace> hs;
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {+1, -1}) {
      Eigen::Vector3d d = Eigen::Vector3d::Zero();
      d[axis] = sign;
      hs.push_back(plane(d, s));
    }
  return hs;
}

std::vector<HalfSpace> octahedron_halfspaces(double s) {
  if (!(s > 0.0 && s * std::sqrt(3.0) < 1.0))
    throw InvalidInput("octahedron_halfspaces: need 0 < s < 1/sqrt(3)");
  std::vector<HalfSpace> hs;
  for (int sx : {+1, -1})
    for (int sy : {+1, -1})
      for (int sz : {+1, -1}) hs.push_back(plane({double(sx), double(sy), double(sz)}, s));
  return hs;
}

std::vector<HalfSpace> triangular_prism_halfspaces(double s) {
  if (!(s > 0.0 && s * std::sqrt(5.0) < 1.0))
    throw InvalidInput("triangular_prism_halfspaces: need 0 < s < 1/sqrt(5)");
  std::vector<HalfSpace> hs;
  hs.push_back(plane({0, 0, 1}, s));
  hs.push_back(plane({0, 0, -1}, s));
  for (int k = 0; k < 3; ++k) {
    const double th = 2.0 * M_PI * k / 3.0;
    hs.push_back(plane({std::cos(th), std::sin(th), 0.0}, s));
  }
  return hs;
}

std::vector<HalfSpace> ideal_octahedron_halfspaces() {
  std::vector<HalfSpace> hs;
  const double inv = 1.0 / std::sqrt(2.0);
  for (int sx : {+1, -1})
    for (int sy : {+1, -1})
      for (int sz : {+1, -1})
        hs.push_back(HalfSpace(
            DSPoint(MinkowskiVec4(inv, Eigen::Vector3d(sx * inv, sy * inv, sz * inv)))));
  return hs;
}

std::vector<HalfSpace> right_angled_dodecahedron_halfspaces() {
  // Face normals along icosahedron vertex directions (0, +-1, +-phi) and cyclic
  // shifts. Adjacent unit directions have dot phi/(2+phi); the offset making all
  // adjacent dihedral angles pi/2 is sqrt(phi/(2+phi)).
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double offset = std::sqrt(phi / (2.0 + phi));
  std::vector<HalfSpace> hs;
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1}) {
      hs.push_back(plane({0.0, double(s1), s2 * phi}, offset));
      hs.push_back(plane({double(s1), s2 * phi, 0.0}, offset));
      hs.push_back(plane({s2 * phi, 0.0, double(s1)}, offset));
    }
  return hs;
}

AbstractPolyhedron tetrahedron() {
  return build_from_halfspaces(tetrahedron_halfspaces()).combinatorics;
}
AbstractPolyhedron cube() {
  return build_from_halfspaces(hexahedron_halfspaces()).combinatorics;
}
AbstractPolyhedron octahedron() {
  return build_from_halfspaces(octahedron_halfspaces()).combinatorics;
}
AbstractPolyhedron triangular_prism() {
  return build_from_halfspaces(triangular_prism_halfspaces()).combinatorics;
}
AbstractPolyhedron dodecahedron() {
  return build_from_halfspaces(right_angled_dodecahedron_halfspaces()).combinatorics;
}

}  // namespace hpolar::catalog
