#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hpolar/common.hpp"

namespace hpolar {

// Intrinsic convex spherical polygon, stored as boundary data only. Vertex i sits
// between side i-1 and side i; side i runs from vertex i to vertex i+1. The boundary
// is traversed counterclockwise with the interior on the left.
struct SphericalPolygon {
  std::vector<double> side_lengths;     // radians, in (0, pi]
  std::vector<double> interior_angles;  // radians, in (0, 2pi)

  SphericalPolygon(std::vector<double> sides, std::vector<double> angles);

  std::size_t size() const { return side_lengths.size(); }
  double perimeter() const;
};

// Polar dual: sides become pi - angles, angles become pi - sides. Involutive.
// Requires a strictly convex input (sides and angles in (0, pi)).
SphericalPolygon spherical_polar_polygon(const SphericalPolygon& p);

// Positions of all vertices on the unit sphere, given that side `anchor_side` runs
// from `from` to `to` (which must subtend that side's length). Counterclockwise
// development; result[i] is the position of vertex i. Fails for anchor sides of
// length pi (antipodal endpoints); use the tangent-anchored variant then.
std::vector<Eigen::Vector3d> embed_polygon(const SphericalPolygon& p, int anchor_side,
                                           const Eigen::Vector3d& from,
                                           const Eigen::Vector3d& to);

// Development with full boundary direction data, anchored by the start point and
// departure direction of one side. depart[i] is the travel direction of side i at
// vertex i; arrive[i] is the travel direction of side i-1 when it reaches vertex i.
struct EmbeddedPolygon {
  std::vector<Eigen::Vector3d> verts;
  std::vector<Eigen::Vector3d> depart;
  std::vector<Eigen::Vector3d> arrive;
};
EmbeddedPolygon embed_polygon_anchored(const SphericalPolygon& p, int anchor_side,
                                       const Eigen::Vector3d& from,
                                       const Eigen::Vector3d& tangent);

// Closure defect of the counterclockwise boundary walk (position + tangent).
double forward_walk_residual(const SphericalPolygon& p);

// Closure defect minimized over the two orientations. Zero for polygons realizable
// on the round sphere.
double realization_residual(const SphericalPolygon& p);
bool is_realizable(const SphericalPolygon& p, double tol = 1e-8);

// Walks one great-circle step: returns the point at arc distance `len` from `p`
// in unit tangent direction `t`, and the transported direction.
struct GreatArcStep {
  Eigen::Vector3d point;
  Eigen::Vector3d tangent;
};
GreatArcStep walk_arc(const Eigen::Vector3d& p, const Eigen::Vector3d& t, double len);

// Rotates tangent `t` at point `p` counterclockwise (seen from outside) by `angle`.
Eigen::Vector3d rotate_tangent(const Eigen::Vector3d& p, const Eigen::Vector3d& t,
                               double angle);

// Spherical angular distance.
double sphere_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

}  // namespace hpolar
