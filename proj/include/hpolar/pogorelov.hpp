#pragma once

#include <array>

#include "hpolar/hpolyhedron.hpp"

namespace hpolar {

// Rigid motion of Euclidean 3-space: v -> d + r v with r a rotation.
struct EuclideanIsometry {
  Eigen::Vector3d d;
  Eigen::Matrix3d r;

  EuclideanIsometry(Eigen::Vector3d t, Eigen::Matrix3d rot);
  Eigen::Vector3d apply(const Eigen::Vector3d& v) const { return d + r * v; }
};

// Phi(x, y) = (2 x_vec / (x0 + y0), 2 y_vec / (x0 + y0)). Continuous and injective;
// the image satisfies |a| + |b| < 2.
std::pair<Eigen::Vector3d, Eigen::Vector3d> phi(const HPoint& x, const HPoint& y);

// Inverse on the guaranteed domain f(|a|, |b|) > 0 with
// f(a, b) = (a^2 - b^2)^2 - 8 (a^2 + b^2 - 2); throws outside it.
std::pair<HPoint, HPoint> phi_inverse(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

double pogorelov_f(double a, double b);

// The Euclidean isometry B with second factor = B(first factor) whenever y = A x:
// D_i = 2 A_i0 / (1 + A_00), R_ij = A_ij - A_i0 A_0j / (1 + A_00).
EuclideanIsometry induced_isometry(const LorentzTransform& a);

// Shear family of Euclidean triangular prisms with edge lengths a (vertical),
// b (slant) and c (far edge), sheared by u. Convex and inside the unit ball.
struct PrismParams {
  double a, b, c, u;
  PrismParams(double a_in, double b_in, double c_in, double u_in);
};

struct EuclideanPrism {
  std::array<Eigen::Vector3d, 6> vertices;

  // Fixed labeled combinatorics of the family: 9 edges tagged by their length
  // class and 5 faces as vertex cycles (two triangles, three quadrilaterals).
  struct Edge {
    int v1, v2;
    char length_class;  // 'a', 'b' or 'c'
  };
  static const std::array<Edge, 9>& edges();
  static const std::vector<std::vector<int>>& faces();
};

EuclideanPrism prism_euclidean(const PrismParams& p);

// The Schlenker pair (F, F') = Phi^{-1}(alpha_u(P), alpha_v(P)): two convex
// hyperbolic prisms with equal edge lengths that are non-congruent when u != v.
struct CounterexamplePair {
  ConvexPolyhedronH3 f, f_prime;
  std::array<CellId, 6> f_vertex_ids, fp_vertex_ids;  // by prism vertex index
};

CounterexamplePair counterexample_pair(double a, double b, double c, double u, double v);

// Metric congruence, reflections included: some combinatorial isomorphism extends
// to a Lorentz transform matching all vertices within tol.
bool are_congruent(const ConvexPolyhedronH3& p1, const ConvexPolyhedronH3& p2,
                   double tol = 1e-9);

}  // namespace hpolar
