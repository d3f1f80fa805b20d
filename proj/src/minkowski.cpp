#include "hpolar/minkowski.hpp"

#include <cmath>

namespace hpolar {

namespace {

const Eigen::Matrix4d& eta() {
  static const Eigen::Matrix4d e = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 0) = -1.0;
    return m;
  }();
  return e;
}

// acosh with the argument clamped to [1, inf) when within kStrictTol below 1.
double safe_acosh(double c) {
  if (c < 1.0) {
    if (c < 1.0 - kStrictTol) throw InvalidInput("acosh argument below 1 beyond tolerance");
    c = 1.0;
  }
  return std::acosh(c);
}

double safe_acos(double c) {
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

}  // namespace

HPoint::HPoint(const MinkowskiVec4& w) {
  const double q = minkowski_inner(w, w);
  if (std::abs(q + 1.0) > kRenormalizeTol)
    throw InvalidInput("HPoint: <v,v> not within 1e-6 of -1");
  if (w.x0 <= 0.0) throw InvalidInput("HPoint: not on the upper sheet (x0 <= 0)");
  v = w * (1.0 / std::sqrt(-q));
}

HPoint HPoint::projective(const MinkowskiVec4& w) {
  const double q = minkowski_inner(w, w);
  if (q >= 0.0) throw InvalidInput("HPoint::projective: vector not timelike");
  MinkowskiVec4 s = w * (1.0 / std::sqrt(-q));
  if (s.x0 < 0.0) s = -s;
  return HPoint(s);
}

DSPoint::DSPoint(const MinkowskiVec4& w) {
  const double q = minkowski_inner(w, w);
  if (std::abs(q - 1.0) > kRenormalizeTol)
    throw InvalidInput("DSPoint: <v,v> not within 1e-6 of +1");
  v = w * (1.0 / std::sqrt(q));
}

DSPoint DSPoint::projective(const MinkowskiVec4& w) {
  const double q = minkowski_inner(w, w);
  if (q <= 0.0) throw InvalidInput("DSPoint::projective: vector not spacelike");
  return DSPoint(w * (1.0 / std::sqrt(q)));
}

LorentzTransform::LorentzTransform(const Eigen::Matrix4d& a) : m(a) {
  if (quadric_residual() > kQuadricTol)
    throw InvalidInput("LorentzTransform: A^T eta A != eta");
  if (m(0, 0) < 1.0 - kQuadricTol)
    throw InvalidInput("LorentzTransform: A00 < 1 (does not fix the upper hyperboloid)");
}

double LorentzTransform::quadric_residual() const {
  const Eigen::Matrix4d r = m.transpose() * eta() * m - eta();
  return r.cwiseAbs().maxCoeff();
}

LorentzTransform LorentzTransform::boost_x(double rapidity) {
  Eigen::Matrix4d a = Eigen::Matrix4d::Identity();
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  a(0, 0) = ch;
  a(0, 1) = sh;
  a(1, 0) = sh;
  a(1, 1) = ch;
  return LorentzTransform(a);
}

LorentzTransform LorentzTransform::boost(const Eigen::Vector3d& axis, double rapidity) {
  const double n = axis.norm();
  if (n == 0.0) throw InvalidInput("boost: zero axis");
  const Eigen::Vector3d u = axis / n;
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  Eigen::Matrix4d a = Eigen::Matrix4d::Identity();
  a(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    a(0, i + 1) = sh * u[i];
    a(i + 1, 0) = sh * u[i];
    for (int j = 0; j < 3; ++j)
      a(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * u[i] * u[j];
  }
  return LorentzTransform(a);
}

LorentzTransform LorentzTransform::rotation(const Eigen::Matrix3d& r) {
  if ((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kQuadricTol)
    throw InvalidInput("rotation: matrix not orthogonal");
  Eigen::Matrix4d a = Eigen::Matrix4d::Identity();
  a.block<3, 3>(1, 1) = r;
  return LorentzTransform(a);
}

LorentzTransform LorentzTransform::inverse() const {
  // A^-1 = eta A^T eta
  return LorentzTransform(eta() * m.transpose() * eta());
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& o) const {
  return LorentzTransform(m * o.m);
}

MinkowskiVec4 apply_lorentz(const LorentzTransform& a, const MinkowskiVec4& p) {
  return MinkowskiVec4::from_vector(a.m * p.as_vector());
}

HPoint apply_lorentz(const LorentzTransform& a, const HPoint& p) {
  return HPoint(apply_lorentz(a, p.v));
}

DSPoint apply_lorentz(const LorentzTransform& a, const DSPoint& p) {
  return DSPoint(apply_lorentz(a, p.v));
}

double hyperbolic_distance(const HPoint& p, const HPoint& q) {
  const double c = -minkowski_inner(p.v, q.v);
  if (c < 1.0 - kQuadricTol) throw InvalidInput("hyperbolic_distance: inputs off the quadric");
  return safe_acosh(c);
}

double spherical_angle_from_sides(double a, double b, double c) {
  const double pi = M_PI;
  if (!(a > 0.0 && a < pi && b > 0.0 && b < pi && c > 0.0 && c < pi))
    throw InvalidInput("spherical_angle_from_sides: sides must lie in (0,pi)");
  if (a >= b + c || b >= a + c || c >= a + b || a + b + c >= 2.0 * pi)
    throw InvalidInput("spherical_angle_from_sides: infeasible side triple");
  const double num = std::cos(a) - std::cos(b) * std::cos(c);
  const double den = std::sin(b) * std::sin(c);
  return safe_acos(num / den);
}

double spherical_turning_in_lune(double alpha, double beta) {
  const double sb = std::sin(beta), cb = std::cos(beta);
  const double cl = -cb * cb + sb * sb * std::cos(M_PI - alpha);
  const double ell = safe_acos(cl);
  return M_PI - ell;
}

}  // namespace hpolar
