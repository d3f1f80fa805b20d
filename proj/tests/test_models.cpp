#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hpolar/models.hpp"
#include "test_util.hpp"

using namespace hpolar;
using testutil::random_hpoint;
using testutil::random_in_ball;
using testutil::random_unit;

TEST_CASE("klein projection basics") {
  CHECK(to_klein(HPoint::apex()).a.norm() == doctest::Approx(0.0));
  const HPoint p(std::cosh(0.8), std::sinh(0.8), 0, 0);
  CHECK(to_klein(p).a.x() == doctest::Approx(std::tanh(0.8)).epsilon(1e-14));

  const HPoint back = from_klein(KleinPoint({std::tanh(1.0), 0, 0}));
  CHECK(back.v.x0 == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
  CHECK(back.v.x.x() == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(KleinPoint({1.0, 0, 0}), InvalidInput);
}

TEST_CASE("quadric residual of from_klein over 1000 samples") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const HPoint p = from_klein(KleinPoint(random_in_ball(rng)));
    CHECK(std::abs(minkowski_inner(p.v, p.v) + 1.0) < 1e-12);
  }
}

TEST_CASE("all six pairwise model round-trips on 1000 points") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 1000; ++i) {
    const HPoint h = random_hpoint(rng, 0.9);
    const KleinPoint k = to_klein(h);
    const PoincarePoint q = to_poincare(h);
    const UpperHalfPoint u = to_upper_half(h);

    CHECK((to_klein(from_klein(k)).a - k.a).norm() < 1e-12);
    CHECK((from_klein(k).v.as_vector() - h.v.as_vector()).norm() < 1e-12);
    CHECK((poincare_to_klein(klein_to_poincare(k)).a - k.a).norm() < 1e-12);
    CHECK((from_poincare(q).v.as_vector() - h.v.as_vector()).norm() < 1e-12);
    CHECK((upper_half_to_poincare(poincare_to_upper_half(q)).p - q.p).norm() < 1e-12);
    CHECK((from_upper_half(u).v.as_vector() - h.v.as_vector()).norm() < 1e-11);
    CHECK((klein_to_upper_half(upper_half_to_klein(u)).h - u.h).norm() < 1e-11);
    CHECK((poincare_to_upper_half(upper_half_to_poincare(u)).h - u.h).norm() < 1e-11);
  }
}

TEST_CASE("distances agree across models") {
  std::mt19937_64 rng(41);
  CHECK(poincare_to_upper_half(PoincarePoint({0, 0, 0})).h.z() == doctest::Approx(1.0));
  for (int i = 0; i < 200; ++i) {
    const HPoint a = random_hpoint(rng, 0.9), b = random_hpoint(rng, 0.9);
    const double d = hyperbolic_distance(a, b);
    CHECK(std::abs(klein_distance(to_klein(a), to_klein(b)) - d) < 1e-9);
    CHECK(std::abs(poincare_distance(to_poincare(a), to_poincare(b)) - d) < 1e-9);
    CHECK(std::abs(upper_half_distance(to_upper_half(a), to_upper_half(b)) - d) < 1e-9);
  }
}

TEST_CASE("klein-poincare map fixes rays and is monotone to the boundary") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d dir = random_unit(rng);
    double prev = 0.0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      const PoincarePoint p = klein_to_poincare(KleinPoint(dir * r));
      CHECK((p.p.normalized() - dir).norm() < 1e-12);  // same ray
      CHECK(p.p.norm() > prev);
      prev = p.p.norm();
    }
    CHECK(prev > 0.85);  // approaches the boundary
  }
}

TEST_CASE("poincare model is conformal at the origin") {
  // The angle of the geodesic triangle (0, p, q) at the origin, recovered from the
  // hyperbolic law of cosines, equals the Euclidean angle between the rays.
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> ur(0.05, 0.7);
  for (int i = 0; i < 300; ++i) {
    const Eigen::Vector3d du = random_unit(rng), dv = random_unit(rng);
    const PoincarePoint p(du * ur(rng)), q(dv * ur(rng));
    const PoincarePoint o(Eigen::Vector3d::Zero());
    const double a = poincare_distance(o, p), b = poincare_distance(o, q);
    const double c = poincare_distance(p, q);
    const double cosang =
        (std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b));
    CHECK(std::abs(cosang - du.dot(dv)) < 1e-10);
  }
}

TEST_CASE("de sitter projective image and dual planes") {
  CHECK_THROWS_AS(desitter_to_exterior(DSPoint(0.0, 1, 0, 0)), InvalidInput);

  const DSPoint n = DSPoint::projective(MinkowskiVec4(1.0, 2.0, 0.0, 0.0));
  CHECK((desitter_to_exterior(n).a - Eigen::Vector3d(2, 0, 0)).norm() < 1e-12);

  // n = (0,1,0,0): the dual plane is the coordinate plane a1 = 0.
  const KleinPlane pl = dual_plane(DSPoint(0.0, 1, 0, 0));
  CHECK(pl.offset == doctest::Approx(0.0));
  CHECK(pl.contains(KleinPoint({0.0, 0.3, -0.2})));

  // The predicate <x,n> = 0 and the Klein plane agree on sampled points.
  std::mt19937_64 rng(53);
  std::normal_distribution<double> g;
  int checked = 0;
  while (checked < 1000) {
    const Eigen::Vector3d dir(g(rng), g(rng), g(rng));
    if (dir.norm() < 1e-3) continue;
    MinkowskiVec4 w(g(rng), dir);
    if (minkowski_inner(w, w) <= 1e-6) continue;
    const DSPoint m = DSPoint::projective(w);
    const KleinPlane plane = dual_plane(m);
    // Sample a Klein point near the plane by projecting a random ball point.
    Eigen::Vector3d a = random_in_ball(rng, 0.9);
    const Eigen::Vector3d nh = plane.normal.normalized();
    a -= (a.dot(plane.normal) - plane.offset) / plane.normal.squaredNorm() * plane.normal;
    if (a.norm() >= 0.999) continue;
    ++checked;
    CHECK(std::abs(plane.eval(a)) < 1e-10);
    CHECK(on_dual_plane(from_klein(KleinPoint(a)), m, 1e-9 * (1.0 + std::abs(m.v.x0))));
    (void)nh;
  }
}

TEST_CASE("sphere tangency picture for x0 = 1 de sitter points") {
  // For n with x0 = 1 the dual Klein plane {a . n = 1} contains the circle where
  // the cone from the exterior point n touches the unit sphere.
  std::mt19937_64 rng(59);
  for (int i = 0; i < 50; ++i) {
    Eigen::Vector3d e = random_unit(rng) * (1.2 + i * 0.05);
    const DSPoint n = DSPoint::projective(MinkowskiVec4(1.0, e));
    const KleinPlane pl = dual_plane(n);
    // Tangency point on the sphere in the plane spanned by e and an orthogonal u:
    // t = e/|e|^2 + u sqrt(1 - 1/|e|^2) satisfies |t| = 1 and t.e = 1.
    const Eigen::Vector3d u = e.cross(random_unit(rng)).normalized();
    const Eigen::Vector3d t =
        e / e.squaredNorm() + u * std::sqrt(1.0 - 1.0 / e.squaredNorm());
    CHECK(std::abs(t.norm() - 1.0) < 1e-12);
    CHECK(std::abs((t - e).dot(t)) < 1e-12);  // cone edge tangent to sphere
    CHECK(std::abs(pl.eval(t) / pl.normal.norm()) < 1e-12);
  }
}
