#pragma once

#include <Eigen/Dense>

#include "hpolar/common.hpp"

namespace hpolar {

// Vector of E^3_1 with signature (-,+,+,+). Index 0 is timelike everywhere.
struct MinkowskiVec4 {
  double x0 = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();

  MinkowskiVec4() = default;
  MinkowskiVec4(double t, Eigen::Vector3d s) : x0(t), x(std::move(s)) {}
  MinkowskiVec4(double t, double x1, double x2, double x3) : x0(t), x(x1, x2, x3) {}

  Eigen::Vector4d as_vector() const { return {x0, x.x(), x.y(), x.z()}; }
  static MinkowskiVec4 from_vector(const Eigen::Vector4d& v) {
    return {v[0], Eigen::Vector3d(v[1], v[2], v[3])};
  }

  MinkowskiVec4 operator+(const MinkowskiVec4& o) const { return {x0 + o.x0, x + o.x}; }
  MinkowskiVec4 operator-(const MinkowskiVec4& o) const { return {x0 - o.x0, x - o.x}; }
  MinkowskiVec4 operator*(double s) const { return {x0 * s, x * s}; }
  MinkowskiVec4 operator-() const { return {-x0, -x}; }
};

inline MinkowskiVec4 operator*(double s, const MinkowskiVec4& v) { return v * s; }

// <a,b> = -a0*b0 + a.x . b.x
inline double minkowski_inner(const MinkowskiVec4& a, const MinkowskiVec4& b) {
  return -a.x0 * b.x0 + a.x.dot(b.x);
}

// Point on the upper sheet of the two-sheeted hyperboloid: <v,v> = -1, v0 > 0.
struct HPoint {
  MinkowskiVec4 v;

  explicit HPoint(const MinkowskiVec4& w);
  HPoint(double t, double x1, double x2, double x3) : HPoint(MinkowskiVec4(t, x1, x2, x3)) {}

  // Accepts any timelike vector, scales onto the quadric, flips to the upper sheet.
  static HPoint projective(const MinkowskiVec4& w);
  static HPoint apex() { return HPoint(MinkowskiVec4(1.0, 0.0, 0.0, 0.0)); }
};

// Point of de Sitter space S^2_1: <v,v> = +1. Parameterizes oriented planes of H^3.
struct DSPoint {
  MinkowskiVec4 v;

  explicit DSPoint(const MinkowskiVec4& w);
  DSPoint(double t, double x1, double x2, double x3) : DSPoint(MinkowskiVec4(t, x1, x2, x3)) {}

  static DSPoint projective(const MinkowskiVec4& w);
};

// 4x4 matrix A with A^T eta A = eta and A00 >= 1 (fixes the upper hyperboloid).
struct LorentzTransform {
  Eigen::Matrix4d m;

  explicit LorentzTransform(const Eigen::Matrix4d& a);

  static LorentzTransform identity() { return LorentzTransform(Eigen::Matrix4d::Identity()); }
  static LorentzTransform boost_x(double rapidity);
  // Boost of given rapidity along an arbitrary spatial direction.
  static LorentzTransform boost(const Eigen::Vector3d& axis, double rapidity);
  // Embeds a 3x3 orthogonal matrix as a spatial isometry (A00 = 1, A_i0 = A_0j = 0).
  static LorentzTransform rotation(const Eigen::Matrix3d& r);

  LorentzTransform inverse() const;
  LorentzTransform operator*(const LorentzTransform& o) const;

  // Max entrywise residual of A^T eta A - eta.
  double quadric_residual() const;
};

MinkowskiVec4 apply_lorentz(const LorentzTransform& a, const MinkowskiVec4& p);
HPoint apply_lorentz(const LorentzTransform& a, const HPoint& p);
DSPoint apply_lorentz(const LorentzTransform& a, const DSPoint& p);

// d = arccosh(-<p,q>). Throws InvalidInput when -<p,q> < 1 beyond kQuadricTol.
double hyperbolic_distance(const HPoint& p, const HPoint& q);

// Solves cos a = cos b cos c + sin b sin c cos(alpha) for the angle opposite side a.
// Sides in (0,pi), triple must satisfy the spherical triangle inequalities and a+b+c < 2pi.
double spherical_angle_from_sides(double a, double b, double c);

// Turning of an intrinsic geodesic crossing the ridge of two half planes meeting at
// exterior dihedral angle alpha, hit at angle beta: tau = pi - l with
// cos l = -cos^2(beta) + sin^2(beta) cos(pi - alpha). Satisfies tau <= alpha.
double spherical_turning_in_lune(double alpha, double beta);

}  // namespace hpolar
