#include "hpolar/pogorelov.hpp"

#include <algorithm>
#include <cmath>

#include "hpolar/models.hpp"

namespace hpolar {

EuclideanIsometry::EuclideanIsometry(Eigen::Vector3d t, Eigen::Matrix3d rot)
    : d(std::move(t)), r(std::move(rot)) {
  if ((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidInput("EuclideanIsometry: R^T R != I");
  if (r.determinant() < 0.0)
    throw InvalidInput("EuclideanIsometry: det R = -1 (not a rotation)");
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> phi(const HPoint& x, const HPoint& y) {
  const double s = x.v.x0 + y.v.x0;  // >= 2 on the hyperboloid
  return {2.0 * x.v.x / s, 2.0 * y.v.x / s};
}

double pogorelov_f(double a, double b) {
  const double a2 = a * a, b2 = b * b;
  return (a2 - b2) * (a2 - b2) - 8.0 * (a2 + b2 - 2.0);
}

std::pair<HPoint, HPoint> phi_inverse(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const double na = a.norm(), nb = b.norm();
  const double f = pogorelov_f(na, nb);
  if (f <= 1e-12)
    throw InvalidInput("phi_inverse: outside the guaranteed domain (f <= 0)");
  const double inv = 1.0 / std::sqrt(f);
  const double x0 = (4.0 + na * na - nb * nb) * inv;
  const double y0 = (4.0 - na * na + nb * nb) * inv;
  if (x0 <= 0.0 || y0 <= 0.0)
    throw InvalidInput("phi_inverse: image is not on the upper hyperboloid");
  return {HPoint(MinkowskiVec4(x0, 4.0 * inv * a)), HPoint(MinkowskiVec4(y0, 4.0 * inv * b))};
}

EuclideanIsometry induced_isometry(const LorentzTransform& a) {
  const double a00 = a.m(0, 0);
  Eigen::Vector3d d;
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    d[i] = 2.0 * a.m(i + 1, 0) / (1.0 + a00);
    for (int j = 0; j < 3; ++j)
      r(i, j) = a.m(i + 1, j + 1) - a.m(i + 1, 0) * a.m(0, j + 1) / (1.0 + a00);
  }
  return EuclideanIsometry(std::move(d), std::move(r));
}

PrismParams::PrismParams(double a_in, double b_in, double c_in, double u_in)
    : a(a_in), b(b_in), c(c_in), u(u_in) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw InvalidInput("PrismParams: lengths must be positive");
  if (!(b * b - c * c / 4.0 - u * u > 0.0))
    throw InvalidInput("PrismParams: need b^2 - c^2/4 - u^2 > 0 for a convex prism");
  const double w = std::sqrt(b * b - c * c / 4.0 - u * u);
  const double far = std::max(std::hypot(w, std::hypot(c / 2.0, u)),
                              std::hypot(w, std::hypot(c / 2.0, u + a)));
  if (std::max(far, a) >= 1.0)
    throw InvalidInput("PrismParams: prism does not fit inside the open unit ball");
}

const std::array<EuclideanPrism::Edge, 9>& EuclideanPrism::edges() {
  static const std::array<Edge, 9> e = {{{0, 1, 'a'},
                                         {2, 4, 'a'},
                                         {3, 5, 'a'},
                                         {0, 2, 'b'},
                                         {0, 3, 'b'},
                                         {1, 4, 'b'},
                                         {1, 5, 'b'},
                                         {2, 3, 'c'},
                                         {4, 5, 'c'}}};
  return e;
}

const std::vector<std::vector<int>>& EuclideanPrism::faces() {
  static const std::vector<std::vector<int>> f = {
      {0, 2, 3}, {1, 4, 5}, {0, 1, 4, 2}, {0, 1, 5, 3}, {2, 3, 5, 4}};
  return f;
}

EuclideanPrism prism_euclidean(const PrismParams& p) {
  const double w = std::sqrt(p.b * p.b - p.c * p.c / 4.0 - p.u * p.u);
  EuclideanPrism prism;
  prism.vertices = {Eigen::Vector3d(0, 0, 0),
                    Eigen::Vector3d(0, 0, p.a),
                    Eigen::Vector3d(w, p.c / 2.0, p.u),
                    Eigen::Vector3d(w, -p.c / 2.0, p.u),
                    Eigen::Vector3d(w, p.c / 2.0, p.u + p.a),
                    Eigen::Vector3d(w, -p.c / 2.0, p.u + p.a)};
  return prism;
}

namespace {

// Half-space of a Klein-chart plane {x . n = d}, oriented away from `interior`.
HalfSpace halfspace_through(const Eigen::Vector3d& n, double d,
                            const Eigen::Vector3d& interior) {
  Eigen::Vector3d nn = n;
  double dd = d;
  if (interior.dot(nn) > dd) {
    nn = -nn;
    dd = -dd;
  }
  const double norm2 = nn.squaredNorm() - dd * dd;
  if (norm2 <= 0.0)
    throw ConstructionError("face plane does not meet the Klein ball");
  const double s = 1.0 / std::sqrt(norm2);
  return HalfSpace(DSPoint(MinkowskiVec4(dd * s, nn * s)));
}

// Best-fit plane through >= 3 points; returns (unit normal, offset, max residual).
std::tuple<Eigen::Vector3d, double, double> fit_plane(const std::vector<Eigen::Vector3d>& pts) {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& p : pts) c += p;
  c /= double(pts.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : pts) cov += (p - c) * (p - c).transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  const Eigen::Vector3d n = es.eigenvectors().col(0);
  double res = 0.0;
  for (const auto& p : pts) res = std::max(res, std::abs(n.dot(p - c)));
  return {n, n.dot(c), res};
}

std::array<Eigen::Vector3d, 6> pull_back(const EuclideanPrism& eu, const EuclideanPrism& ev,
                                         bool first_factor) {
  std::array<Eigen::Vector3d, 6> klein;
  for (int i = 0; i < 6; ++i) {
    const auto [x, y] = phi_inverse(eu.vertices[std::size_t(i)], ev.vertices[std::size_t(i)]);
    klein[std::size_t(i)] = to_klein(first_factor ? x : y).a;
  }
  return klein;
}

struct BuiltPrism {
  ConvexPolyhedronH3 poly;
  std::array<CellId, 6> vertex_ids;
};

BuiltPrism build_hyperbolic_prism(const std::array<Eigen::Vector3d, 6>& klein) {
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& v : klein) centroid += v;
  centroid /= 6.0;

  std::vector<HalfSpace> hs;
  for (const auto& cyc : EuclideanPrism::faces()) {
    std::vector<Eigen::Vector3d> pts;
    for (int i : cyc) pts.push_back(klein[std::size_t(i)]);
    auto [n, d, res] = fit_plane(pts);
    // Faces whose plane passes through the chart origin are exact images of
    // hyperbolic planes; everything else must still be planar within tolerance.
    if (std::abs(d) < 1e-12) d = 0.0;
    if (res > 1e-8)
      throw ConstructionError("counterexample face is not planar: residual " +
                              std::to_string(res));
    hs.push_back(halfspace_through(n, d, centroid));
  }

  BuiltPrism out{build_from_halfspaces(hs), {}};
  if (out.poly.combinatorics.vertices.size() != 6)
    throw ConstructionError("counterexample pair: image is not a convex prism");
  for (int i = 0; i < 6; ++i) {
    int best = -1;
    double best_d = 1e30;
    for (std::size_t v = 0; v < out.poly.vertex_coords.size(); ++v) {
      const double d = (out.poly.vertex_coords[v] - klein[std::size_t(i)]).norm();
      if (d < best_d) {
        best_d = d;
        best = int(v);
      }
    }
    if (best_d > 1e-7)
      throw ConstructionError("counterexample pair: vertex " + std::to_string(i) +
                              " moved by " + std::to_string(best_d) +
                              " (convexity failure)");
    out.vertex_ids[std::size_t(i)] = out.poly.combinatorics.vertices[std::size_t(best)];
  }
  return out;
}

}  // namespace

CounterexamplePair counterexample_pair(double a, double b, double c, double u, double v) {
  const PrismParams pu(a, b, c, u), pv(a, b, c, v);
  const EuclideanPrism eu = prism_euclidean(pu), ev = prism_euclidean(pv);

  BuiltPrism f = build_hyperbolic_prism(pull_back(eu, ev, true));
  BuiltPrism fp = build_hyperbolic_prism(pull_back(eu, ev, false));

  CounterexamplePair pair{std::move(f.poly), std::move(fp.poly), f.vertex_ids, fp.vertex_ids};

  for (std::size_t i = 0; i < pair.f_vertex_ids.size(); ++i) {
    const int vi = pair.f.vertex_index(pair.f_vertex_ids[i]);
    const int wi = pair.f_prime.vertex_index(pair.fp_vertex_ids[i]);
    if (pair.f.vertex_class[std::size_t(vi)] != VertexClass::Finite ||
        pair.f_prime.vertex_class[std::size_t(wi)] != VertexClass::Finite)
      throw ConstructionError("counterexample pair: non-finite vertex");
  }
  return pair;
}

bool are_congruent(const ConvexPolyhedronH3& p1, const ConvexPolyhedronH3& p2, double tol) {
  if (!p1.compact() || !p2.compact())
    throw InvalidInput("are_congruent: both polyhedra must be compact");

  const std::size_t nv = p1.combinatorics.vertices.size();
  if (nv != p2.combinatorics.vertices.size()) return false;

  std::vector<Eigen::Vector4d> x1(nv), x2(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    x1[i] = vertex_hpoint(p1, int(i)).v.as_vector();
    x2[i] = vertex_hpoint(p2, int(i)).v.as_vector();
  }

  // Four vertices of p1 spanning E^3_1, chosen greedily.
  std::vector<int> frame;
  {
    Eigen::MatrixXd m(4, 0);
    for (std::size_t i = 0; i < nv && frame.size() < 4; ++i) {
      Eigen::MatrixXd trial(4, m.cols() + 1);
      trial << m, x1[i];
      Eigen::FullPivLU<Eigen::MatrixXd> lu(trial);
      if (lu.rank() == trial.cols()) {
        m = trial;
        frame.push_back(int(i));
      }
    }
    if (frame.size() < 4) return false;  // degenerate vertex set
  }
  Eigen::Matrix4d v1;
  for (int k = 0; k < 4; ++k) v1.col(k) = x1[std::size_t(frame[std::size_t(k)])];
  const Eigen::Matrix4d v1_inv = v1.inverse();

  for (const auto& iso : all_isomorphisms(p1.combinatorics, p2.combinatorics)) {
    Eigen::Matrix4d v2;
    for (int k = 0; k < 4; ++k) {
      const CellId id1 = p1.combinatorics.vertices[std::size_t(frame[std::size_t(k)])];
      const int j = p2.vertex_index(iso.vertex_map.at(id1));
      v2.col(k) = x2[std::size_t(j)];
    }
    const Eigen::Matrix4d t = v2 * v1_inv;

    Eigen::Matrix4d eta = Eigen::Matrix4d::Identity();
    eta(0, 0) = -1.0;
    if ((t.transpose() * eta * t - eta).cwiseAbs().maxCoeff() > 1e-7) continue;
    if (t(0, 0) < 0.0) continue;

    bool all_match = true;
    for (std::size_t i = 0; i < nv && all_match; ++i) {
      const CellId id1 = p1.combinatorics.vertices[i];
      const int j = p2.vertex_index(iso.vertex_map.at(id1));
      if ((t * x1[i] - x2[std::size_t(j)]).norm() > tol * (1.0 + x1[i].norm()))
        all_match = false;
    }
    if (all_match) return true;
  }
  return false;
}

}  // namespace hpolar
