#include "hpolar/spherical.hpp"

#include <cmath>

namespace hpolar {

SphericalPolygon::SphericalPolygon(std::vector<double> sides, std::vector<double> angles)
    : side_lengths(std::move(sides)), interior_angles(std::move(angles)) {
  if (side_lengths.size() != interior_angles.size())
    throw InvalidInput("SphericalPolygon: side/angle counts differ");
  if (side_lengths.size() < 2) throw InvalidInput("SphericalPolygon: needs at least 2 sides");
  for (double s : side_lengths)
    if (!(s > 0.0 && s <= M_PI + kStrictTol))
      throw InvalidInput("SphericalPolygon: side length outside (0, pi]");
  for (double a : interior_angles)
    if (!(a > 0.0 && a < 2.0 * M_PI))
      throw InvalidInput("SphericalPolygon: interior angle outside (0, 2pi)");
}

double SphericalPolygon::perimeter() const {
  double s = 0.0;
  for (double l : side_lengths) s += l;
  return s;
}

SphericalPolygon spherical_polar_polygon(const SphericalPolygon& p) {
  std::vector<double> sides(p.size()), angles(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.interior_angles[i] >= M_PI)
      throw InvalidInput("spherical_polar_polygon: polygon not strictly convex");
    if (p.side_lengths[i] >= M_PI)
      throw InvalidInput("spherical_polar_polygon: side of length >= pi");
    sides[i] = M_PI - p.interior_angles[i];
    angles[i] = M_PI - p.side_lengths[i];
  }
  return SphericalPolygon(std::move(sides), std::move(angles));
}

GreatArcStep walk_arc(const Eigen::Vector3d& p, const Eigen::Vector3d& t, double len) {
  const double c = std::cos(len), s = std::sin(len);
  return {c * p + s * t, -s * p + c * t};
}

Eigen::Vector3d rotate_tangent(const Eigen::Vector3d& p, const Eigen::Vector3d& t,
                               double angle) {
  return std::cos(angle) * t + std::sin(angle) * p.cross(t);
}

double sphere_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const double c = std::clamp(a.dot(b), -1.0, 1.0);
  return std::acos(c);
}

std::vector<Eigen::Vector3d> embed_polygon(const SphericalPolygon& p, int anchor_side,
                                           const Eigen::Vector3d& from,
                                           const Eigen::Vector3d& to) {
  const double l0 = p.side_lengths[std::size_t(anchor_side)];
  Eigen::Vector3d dir = (to - std::cos(l0) * from);
  const double dn = dir.norm();
  if (dn < 1e-14) throw InvalidInput("embed_polygon: anchor endpoints (anti)parallel");
  return embed_polygon_anchored(p, anchor_side, from, dir / dn).verts;
}

EmbeddedPolygon embed_polygon_anchored(const SphericalPolygon& p, int anchor_side,
                                       const Eigen::Vector3d& from,
                                       const Eigen::Vector3d& tangent) {
  const int n = int(p.size());
  EmbeddedPolygon e;
  e.verts.assign(std::size_t(n), Eigen::Vector3d::Zero());
  e.depart.assign(std::size_t(n), Eigen::Vector3d::Zero());
  e.arrive.assign(std::size_t(n), Eigen::Vector3d::Zero());

  Eigen::Vector3d pos = from;
  Eigen::Vector3d dir = tangent;
  int side = anchor_side;
  e.verts[std::size_t(side)] = pos;
  e.depart[std::size_t(side)] = dir;
  for (int step = 0; step < n; ++step) {
    GreatArcStep g = walk_arc(pos, dir, p.side_lengths[std::size_t(side)]);
    const int next_vertex = (side + 1) % n;
    // Last step only refreshes the arrival data at the anchor vertex.
    e.verts[std::size_t(next_vertex)] = step == n - 1 ? e.verts[std::size_t(next_vertex)]
                                                      : g.point;
    e.arrive[std::size_t(next_vertex)] = g.tangent;
    const double turn = M_PI - p.interior_angles[std::size_t(next_vertex)];
    pos = step == n - 1 ? e.verts[std::size_t(next_vertex)] : g.point;
    dir = rotate_tangent(pos, g.tangent, turn);
    if (step < n - 1) e.depart[std::size_t(next_vertex)] = dir;
    side = next_vertex;
  }
  return e;
}

double forward_walk_residual(const SphericalPolygon& p) {
  const Eigen::Vector3d start(1.0, 0.0, 0.0);
  Eigen::Vector3d pos = start;
  Eigen::Vector3d dir(0.0, 1.0, 0.0);
  const Eigen::Vector3d dir0 = dir;
  const int n = int(p.size());
  for (int k = 0; k < n; ++k) {
    GreatArcStep g = walk_arc(pos, dir, p.side_lengths[std::size_t(k)]);
    const double turn = M_PI - p.interior_angles[std::size_t((k + 1) % n)];
    pos = g.point;
    dir = rotate_tangent(pos, g.tangent, turn);
  }
  return (pos - start).norm() + (dir - dir0).norm();
}

namespace {

SphericalPolygon reversed(const SphericalPolygon& p) {
  const int n = int(p.size());
  std::vector<double> sides(static_cast<std::size_t>(n)), angles(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sides[std::size_t(i)] = p.side_lengths[std::size_t(n - 1 - i)];
    angles[std::size_t(i)] = p.interior_angles[std::size_t((n - i) % n)];
  }
  return SphericalPolygon(std::move(sides), std::move(angles));
}

}  // namespace

double realization_residual(const SphericalPolygon& p) {
  return std::min(forward_walk_residual(p), forward_walk_residual(reversed(p)));
}

bool is_realizable(const SphericalPolygon& p, double tol) {
  return realization_residual(p) <= tol;
}

}  // namespace hpolar
