#pragma once

#include <Eigen/Dense>

#include "hpolar/minkowski.hpp"

namespace hpolar {

// Klein (projective) model point: open unit ball, straight geodesics.
struct KleinPoint {
  Eigen::Vector3d a;
  explicit KleinPoint(Eigen::Vector3d p);
};

// Projective image of a de Sitter point on the chart x0 = 1: lies outside the unit ball.
struct ExteriorPoint {
  Eigen::Vector3d a;
  explicit ExteriorPoint(Eigen::Vector3d p);
};

// Poincare (conformal) ball model point.
struct PoincarePoint {
  Eigen::Vector3d p;
  explicit PoincarePoint(Eigen::Vector3d q);
};

// Upper half-space model point (third coordinate > 0).
struct UpperHalfPoint {
  Eigen::Vector3d h;
  explicit UpperHalfPoint(Eigen::Vector3d q);
};

// Euclidean plane {a : a . normal = offset} in the Klein chart, realizing the
// hyperbolic plane {x in H^3 : <x, n> = 0} dual to the de Sitter point n.
struct KleinPlane {
  Eigen::Vector3d normal;
  double offset = 0.0;

  double eval(const Eigen::Vector3d& a) const { return a.dot(normal) - offset; }
  bool contains(const KleinPoint& a, double tol = 1e-10) const {
    return std::abs(eval(a.a)) <= tol;
  }
};

KleinPoint to_klein(const HPoint& p);
HPoint from_klein(const KleinPoint& a);

PoincarePoint klein_to_poincare(const KleinPoint& a);
KleinPoint poincare_to_klein(const PoincarePoint& p);

UpperHalfPoint poincare_to_upper_half(const PoincarePoint& p);
PoincarePoint upper_half_to_poincare(const UpperHalfPoint& h);

PoincarePoint to_poincare(const HPoint& p);
HPoint from_poincare(const PoincarePoint& p);
UpperHalfPoint to_upper_half(const HPoint& p);
HPoint from_upper_half(const UpperHalfPoint& h);
UpperHalfPoint klein_to_upper_half(const KleinPoint& a);
KleinPoint upper_half_to_klein(const UpperHalfPoint& h);

// Projective image of a de Sitter point. Throws InvalidInput when |x0| < 1e-12
// (the dual plane passes through the Klein-model origin).
ExteriorPoint desitter_to_exterior(const DSPoint& n);

// Klein-chart plane realizing the hyperbolic plane dual to n.
KleinPlane dual_plane(const DSPoint& n);

// Membership of x in the dual plane of n: <x, n> = 0 within tol.
bool on_dual_plane(const HPoint& x, const DSPoint& n, double tol = 1e-10);

// Model-intrinsic distance formulas (used as independent oracles).
double klein_distance(const KleinPoint& a, const KleinPoint& b);
double poincare_distance(const PoincarePoint& a, const PoincarePoint& b);
double upper_half_distance(const UpperHalfPoint& a, const UpperHalfPoint& b);

}  // namespace hpolar
