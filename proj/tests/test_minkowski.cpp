#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hpolar/minkowski.hpp"
#include "test_util.hpp"

using namespace hpolar;
using testutil::random_hpoint;
using testutil::random_lorentz;

TEST_CASE("minkowski inner product basics") {
  const MinkowskiVec4 e0(1, 0, 0, 0), e1(0, 1, 0, 0);
  CHECK(minkowski_inner(e0, e0) == doctest::Approx(-1.0));
  CHECK(minkowski_inner(e0, e1) == doctest::Approx(0.0));
  const MinkowskiVec4 p(std::cosh(1.0), std::sinh(1.0), 0, 0);
  CHECK(minkowski_inner(p, e0) == doctest::Approx(-std::cosh(1.0)).epsilon(1e-12));

  // Symmetry and bilinearity on random vectors.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  for (int i = 0; i < 100; ++i) {
    const MinkowskiVec4 a(n(rng), n(rng), n(rng), n(rng));
    const MinkowskiVec4 b(n(rng), n(rng), n(rng), n(rng));
    const MinkowskiVec4 c(n(rng), n(rng), n(rng), n(rng));
    CHECK(minkowski_inner(a, b) == doctest::Approx(minkowski_inner(b, a)));
    CHECK(minkowski_inner(a + b, c) ==
          doctest::Approx(minkowski_inner(a, c) + minkowski_inner(b, c)).epsilon(1e-10));
  }
}

TEST_CASE("HPoint and DSPoint constructors renormalize or reject") {
  CHECK_NOTHROW(HPoint(1.0, 0, 0, 0));
  CHECK_THROWS_AS(HPoint(-1.0, 0, 0, 0), InvalidInput);       // lower sheet
  CHECK_THROWS_AS(HPoint(2.0, 0, 0, 0), InvalidInput);        // far off the quadric
  const HPoint nudged(1.0 + 4e-7, 0, 0, 0);                   // within 1e-6, renormalized
  CHECK(minkowski_inner(nudged.v, nudged.v) == doctest::Approx(-1.0).epsilon(1e-14));

  CHECK_NOTHROW(DSPoint(0.0, 1, 0, 0));
  CHECK_THROWS_AS(DSPoint(0.0, 2, 0, 0), InvalidInput);
  const DSPoint d = DSPoint::projective(MinkowskiVec4(1.0, 2.0, 0.0, 0.0));
  CHECK(minkowski_inner(d.v, d.v) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hyperbolic distance") {
  const HPoint apex = HPoint::apex();
  CHECK(hyperbolic_distance(apex, apex) == doctest::Approx(0.0));
  const HPoint p(std::cosh(1.0), std::sinh(1.0), 0, 0);
  CHECK(hyperbolic_distance(p, apex) == doctest::Approx(1.0).epsilon(1e-12));

  // Metric properties on sampled points.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const HPoint a = random_hpoint(rng), b = random_hpoint(rng), c = random_hpoint(rng);
    const double ab = hyperbolic_distance(a, b);
    CHECK(ab == doctest::Approx(hyperbolic_distance(b, a)));
    CHECK(ab + hyperbolic_distance(b, c) >= hyperbolic_distance(a, c) - 1e-12);
  }
}

TEST_CASE("distance is Lorentz invariant over 1000 samples") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const HPoint a = random_hpoint(rng), b = random_hpoint(rng);
    const LorentzTransform t = random_lorentz(rng);
    const double before = hyperbolic_distance(a, b);
    const double after = hyperbolic_distance(apply_lorentz(t, a), apply_lorentz(t, b));
    CHECK(std::abs(before - after) < 1e-10);
  }
}

TEST_CASE("apply_lorentz basics and inner product preservation") {
  const auto id = LorentzTransform::identity();
  const HPoint p(std::cosh(0.3), std::sinh(0.3), 0, 0);
  const HPoint q = apply_lorentz(id, p);
  CHECK((q.v.as_vector() - p.v.as_vector()).norm() == doctest::Approx(0.0));

  const auto bx = LorentzTransform::boost_x(0.7);
  const HPoint im = apply_lorentz(bx, HPoint::apex());
  CHECK(im.v.x0 == doctest::Approx(std::cosh(0.7)).epsilon(1e-14));
  CHECK(im.v.x.x() == doctest::Approx(std::sinh(0.7)).epsilon(1e-14));

  std::mt19937_64 rng(17);
  std::normal_distribution<double> n;
  for (int i = 0; i < 1000; ++i) {
    const LorentzTransform t = random_lorentz(rng);
    const MinkowskiVec4 a(n(rng), n(rng), n(rng), n(rng));
    const MinkowskiVec4 b(n(rng), n(rng), n(rng), n(rng));
    CHECK(std::abs(minkowski_inner(apply_lorentz(t, a), apply_lorentz(t, b)) -
                   minkowski_inner(a, b)) < 1e-10);
  }
}

TEST_CASE("Lorentz transforms satisfy the quadric and row identities") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const LorentzTransform t = random_lorentz(rng);
    CHECK(t.quadric_residual() < 1e-10);
    // A_ij A_kj = delta_ik + A_i0 A_k0 over the spatial indices.
    for (int a = 1; a < 4; ++a)
      for (int k = 1; k < 4; ++k) {
        double sum = 0.0;
        for (int j = 1; j < 4; ++j) sum += t.m(a, j) * t.m(k, j);
        const double expected = (a == k ? 1.0 : 0.0) + t.m(a, 0) * t.m(k, 0);
        CHECK(std::abs(sum - expected) < 1e-10);
      }
    // Inverse composes to the identity.
    const LorentzTransform u = t * t.inverse();
    CHECK((u.m - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK_THROWS_AS(LorentzTransform(Eigen::Matrix4d::Identity() * 2.0), InvalidInput);
  Eigen::Matrix4d lower = Eigen::Matrix4d::Identity();
  lower(0, 0) = -1.0;
  lower(1, 1) = -1.0;
  CHECK_THROWS_AS(LorentzTransform{lower}, InvalidInput);  // fixes the lower sheet
}

TEST_CASE("spherical angle from sides") {
  CHECK(spherical_angle_from_sides(M_PI / 2, M_PI / 2, M_PI / 2) ==
        doctest::Approx(M_PI / 2).epsilon(1e-14));
  CHECK_THROWS_AS(spherical_angle_from_sides(3.0, 0.1, 0.1), InvalidInput);
  CHECK_THROWS_AS(spherical_angle_from_sides(2.5, 2.5, 1.5), InvalidInput);  // sum >= 2pi

  // Equilateral with sides in [pi/2, pi): the angle is no less than the side.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(M_PI / 2, M_PI - 1e-6);
  for (int i = 0; i < 500; ++i) {
    const double ell = u(rng);
    if (3.0 * ell >= 2.0 * M_PI) continue;
    CHECK(spherical_angle_from_sides(ell, ell, ell) >= ell - 1e-12);
  }

  // Forward/backward round trip on random valid triangles.
  std::uniform_real_distribution<double> s(0.1, M_PI - 0.1);
  int tested = 0;
  while (tested < 1000) {
    const double a = s(rng), b = s(rng), c = s(rng);
    if (a >= b + c || b >= a + c || c >= a + b || a + b + c >= 2 * M_PI - 1e-9) continue;
    ++tested;
    const double alpha = spherical_angle_from_sides(a, b, c);
    const double lhs = std::cos(a);
    const double rhs = std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(alpha);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("turning in a lune") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ua(0.0, M_PI), ub(1e-3, M_PI - 1e-3);
  CHECK(spherical_turning_in_lune(0.4, M_PI / 2) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(spherical_turning_in_lune(0.0, 1.234) == doctest::Approx(0.0));
  for (int i = 0; i < 1000; ++i) {
    const double alpha = ua(rng), beta = ub(rng);
    CHECK(spherical_turning_in_lune(alpha, beta) <= alpha + 1e-12);
  }
}
