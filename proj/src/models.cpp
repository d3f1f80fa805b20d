#include "hpolar/models.hpp"

#include <cmath>

namespace hpolar {

namespace {
double acosh_clamped(double c) {
  return std::acosh(c < 1.0 ? 1.0 : c);
}
}  // namespace

KleinPoint::KleinPoint(Eigen::Vector3d p) : a(std::move(p)) {
  if (a.norm() >= 1.0) throw InvalidInput("KleinPoint: |a| >= 1 is not a finite point");
}

ExteriorPoint::ExteriorPoint(Eigen::Vector3d p) : a(std::move(p)) {
  if (a.norm() <= 1.0) throw InvalidInput("ExteriorPoint: |a| <= 1");
}

PoincarePoint::PoincarePoint(Eigen::Vector3d q) : p(std::move(q)) {
  if (p.norm() >= 1.0) throw InvalidInput("PoincarePoint: |p| >= 1");
}

UpperHalfPoint::UpperHalfPoint(Eigen::Vector3d q) : h(std::move(q)) {
  if (h.z() <= 0.0) throw InvalidInput("UpperHalfPoint: height <= 0");
}

KleinPoint to_klein(const HPoint& p) {
  return KleinPoint(p.v.x / p.v.x0);
}

HPoint from_klein(const KleinPoint& a) {
  const double s2 = 1.0 - a.a.squaredNorm();
  const double inv = 1.0 / std::sqrt(s2);
  return HPoint(MinkowskiVec4(inv, a.a * inv));
}

PoincarePoint klein_to_poincare(const KleinPoint& a) {
  const double s = std::sqrt(1.0 - a.a.squaredNorm());
  return PoincarePoint(a.a / (1.0 + s));
}

KleinPoint poincare_to_klein(const PoincarePoint& p) {
  return KleinPoint(2.0 * p.p / (1.0 + p.p.squaredNorm()));
}

// The ball maps to the half space by inversion in the sphere of radius sqrt(2)
// centered at the north pole, followed by a flip of the third coordinate. The
// origin goes to (0,0,1); the north pole goes to the plane at infinity.
UpperHalfPoint poincare_to_upper_half(const PoincarePoint& p) {
  const Eigen::Vector3d n(0.0, 0.0, 1.0);
  const Eigen::Vector3d u = p.p - n;
  const Eigen::Vector3d w = n + 2.0 * u / u.squaredNorm();
  return UpperHalfPoint(Eigen::Vector3d(w.x(), w.y(), -w.z()));
}

PoincarePoint upper_half_to_poincare(const UpperHalfPoint& h) {
  const Eigen::Vector3d n(0.0, 0.0, 1.0);
  const Eigen::Vector3d f(h.h.x(), h.h.y(), -h.h.z());
  const Eigen::Vector3d u = f - n;
  return PoincarePoint(n + 2.0 * u / u.squaredNorm());
}

PoincarePoint to_poincare(const HPoint& p) { return klein_to_poincare(to_klein(p)); }
HPoint from_poincare(const PoincarePoint& p) { return from_klein(poincare_to_klein(p)); }
UpperHalfPoint to_upper_half(const HPoint& p) { return poincare_to_upper_half(to_poincare(p)); }
HPoint from_upper_half(const UpperHalfPoint& h) { return from_poincare(upper_half_to_poincare(h)); }
UpperHalfPoint klein_to_upper_half(const KleinPoint& a) { return poincare_to_upper_half(klein_to_poincare(a)); }
KleinPoint upper_half_to_klein(const UpperHalfPoint& h) { return poincare_to_klein(upper_half_to_poincare(h)); }

ExteriorPoint desitter_to_exterior(const DSPoint& n) {
  if (std::abs(n.v.x0) < 1e-12)
    throw InvalidInput("desitter_to_exterior: point at projective infinity (x0 = 0)");
  return ExteriorPoint(n.v.x / n.v.x0);
}

KleinPlane dual_plane(const DSPoint& n) {
  return KleinPlane{n.v.x, n.v.x0};
}

bool on_dual_plane(const HPoint& x, const DSPoint& n, double tol) {
  return std::abs(minkowski_inner(x.v, n.v)) <= tol;
}

double klein_distance(const KleinPoint& a, const KleinPoint& b) {
  const double num = 1.0 - a.a.dot(b.a);
  const double den = std::sqrt((1.0 - a.a.squaredNorm()) * (1.0 - b.a.squaredNorm()));
  return acosh_clamped(num / den);
}

double poincare_distance(const PoincarePoint& a, const PoincarePoint& b) {
  const double d2 = (a.p - b.p).squaredNorm();
  const double den = (1.0 - a.p.squaredNorm()) * (1.0 - b.p.squaredNorm());
  return acosh_clamped(1.0 + 2.0 * d2 / den);
}

double upper_half_distance(const UpperHalfPoint& a, const UpperHalfPoint& b) {
  const double d2 = (a.h - b.h).squaredNorm();
  return acosh_clamped(1.0 + d2 / (2.0 * a.h.z() * b.h.z()));
}

}  // namespace hpolar
