#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hpolar/catalog.hpp"
#include "hpolar/cone_metric.hpp"
#include "hpolar/geodesics.hpp"
#include "hpolar/polar_checks.hpp"
#include "test_util.hpp"

using namespace hpolar;

namespace {

SphericalPolygon octant() {
  return SphericalPolygon({M_PI / 2, M_PI / 2, M_PI / 2}, {M_PI / 2, M_PI / 2, M_PI / 2});
}

// Two octant triangles glued along corresponding sides (mirror identification).
ConeMetricSurface pillow() {
  std::vector<SphericalPolygon> cells{octant(), octant()};
  std::vector<Gluing> gluings{{0, 0, 1, 2}, {0, 1, 1, 1}, {0, 2, 1, 0}};
  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

ConeMetricSurface round_sphere_octants() { return testutil::octant_sphere(); }

// Suspension: k lunes of angle alpha glued side to side around two poles.
ConeMetricSurface suspension(int k, double alpha) {
  std::vector<SphericalPolygon> cells;
  std::vector<Gluing> gluings;
  for (int i = 0; i < k; ++i) {
    cells.push_back(SphericalPolygon({M_PI, M_PI}, {alpha, alpha}));
    gluings.push_back({i, 1, (i + 1) % k, 0});
  }
  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

// Three hemisphere bigons glued in a cycle: every gluing has length exactly pi.
ConeMetricSurface triple_banana() {
  std::vector<SphericalPolygon> cells;
  std::vector<Gluing> gluings;
  for (int i = 0; i < 3; ++i) {
    cells.push_back(SphericalPolygon({M_PI, M_PI}, {M_PI, M_PI}));
    gluings.push_back({i, 1, (i + 1) % 3, 0});
  }
  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

}  // namespace

TEST_CASE("spherical polar polygon") {
  const SphericalPolygon oct = octant();
  const SphericalPolygon dual = spherical_polar_polygon(oct);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(dual.side_lengths[i] == doctest::Approx(M_PI / 2));
    CHECK(dual.interior_angles[i] == doctest::Approx(M_PI / 2));
  }

  // Equilateral triangle with side l dualizes to angle pi - l.
  const double l = 1.9;
  const double alpha = spherical_angle_from_sides(l, l, l);
  const SphericalPolygon tri({l, l, l}, {alpha, alpha, alpha});
  const SphericalPolygon polar = spherical_polar_polygon(tri);
  CHECK(polar.interior_angles[0] == doctest::Approx(M_PI - l).epsilon(1e-12));
  const double dual_angle =
      spherical_angle_from_sides(polar.side_lengths[0], polar.side_lengths[1],
                                 polar.side_lengths[2]);
  CHECK(dual_angle == doctest::Approx(M_PI - l).epsilon(1e-10));

  CHECK_THROWS_AS(spherical_polar_polygon(SphericalPolygon({M_PI, M_PI}, {1.0, 1.0})),
                  InvalidInput);
}

TEST_CASE("polar involution on 1000 random convex triangles") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.3, 2.5);
  int tested = 0;
  while (tested < 1000) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (a >= b + c || b >= a + c || c >= a + b || a + b + c >= 2 * M_PI - 1e-6) continue;
    if (a >= M_PI || b >= M_PI || c >= M_PI) continue;
    ++tested;
    const std::vector<double> sides{a, b, c};
    std::vector<double> angles(3);
    for (int i = 0; i < 3; ++i)
      angles[std::size_t(i)] =
          spherical_angle_from_sides(sides[std::size_t((i + 1) % 3)], sides[std::size_t(i)],
                                     sides[std::size_t((i + 2) % 3)]);
    const SphericalPolygon p(sides, angles);
    CHECK(forward_walk_residual(p) < 1e-9);  // data consistent and counterclockwise
    const SphericalPolygon pp = spherical_polar_polygon(spherical_polar_polygon(p));
    for (int i = 0; i < 3; ++i) {
      CHECK(pp.side_lengths[std::size_t(i)] ==
            doctest::Approx(p.side_lengths[std::size_t(i)]).epsilon(1e-12));
      CHECK(pp.interior_angles[std::size_t(i)] ==
            doctest::Approx(p.interior_angles[std::size_t(i)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("gauss image of a compact tetrahedron") {
  const auto p = build_from_halfspaces(catalog::tetrahedron_halfspaces(0.28));
  const auto q = gauss_image(p);
  CHECK(q.cells.size() == 4);
  CHECK(q.vertices.size() == 4);
  CHECK(q.euler_characteristic() == 2);

  // Cone angle at G(f) = 2pi + Area(f); edge length of G(e) = pi - dihedral.
  for (const auto& cv : q.vertices)
    CHECK(cv.cone_angle == doctest::Approx(2 * M_PI + face_area(p, cv.label)).epsilon(1e-9));
  for (std::size_t g = 0; g < q.gluings.size(); ++g)
    CHECK(q.side_length(q.gluings[g].cell_a, q.gluings[g].side_a) ==
          doctest::Approx(M_PI - dihedral_angle(p, p.combinatorics.edges[g].id))
              .epsilon(1e-9));
  for (double a : cone_angles(q)) CHECK(a > 2 * M_PI);

  // Combinatorially Poincare dual to P.
  CHECK(isomorphic(surface_complex(q), poincare_dual(p.combinatorics)));

  // Admissible, certified at depth 3 x cells.
  const auto rep = check_admissible(q);
  CHECK(rep.sphere_check.pass);
  CHECK(rep.curvature_check.pass);
  CHECK(rep.cone_angle_check.pass);
  CHECK(rep.geodesic_check.verdict == GeodesicVerdict::Certified);
  CHECK(rep.geodesic_check.depth == 12);
  CHECK(rep.admissible_certified());
}

TEST_CASE("gauss image matches poincare dual on the corpus") {
  for (const auto& hs :
       {catalog::tetrahedron_halfspaces(0.25), catalog::hexahedron_halfspaces(0.4),
        catalog::octahedron_halfspaces(0.4), catalog::triangular_prism_halfspaces(0.25),
        catalog::right_angled_dodecahedron_halfspaces()}) {
    const auto p = build_from_halfspaces(hs);
    const auto q = gauss_image(p);
    CHECK(isomorphic(surface_complex(q), poincare_dual(p.combinatorics)));
    for (const auto& cv : q.vertices)
      CHECK(cv.cone_angle == doctest::Approx(2 * M_PI + face_area(p, cv.label)).epsilon(1e-9));
  }
}

TEST_CASE("pillow cone angles are flagged below 2pi") {
  const auto q = pillow();
  REQUIRE(q.vertices.size() == 3);
  for (double a : cone_angles(q)) CHECK(a == doctest::Approx(M_PI));
  CHECK(cone_points(q).size() == 3);
  const auto rep = check_admissible(q, 6);
  CHECK_FALSE(rep.cone_angle_check.pass);
  CHECK(rep.refuted());
}

TEST_CASE("round sphere: geodesics of length exactly 2pi refute admissibility") {
  const auto q = round_sphere_octants();
  CHECK(q.euler_characteristic() == 2);
  CHECK(cone_points(q).empty());  // smooth everywhere
  const auto rep = check_admissible(q, 16);
  CHECK(rep.sphere_check.pass);
  CHECK(rep.curvature_check.pass);
  CHECK(rep.cone_angle_check.pass);  // vacuous: no cone points
  REQUIRE(rep.geodesic_check.verdict == GeodesicVerdict::Refuted);
  CHECK(rep.geodesic_check.witness_length == doctest::Approx(2 * M_PI).epsilon(1e-9));
}

TEST_CASE("suspension: the meridian geodesic has length exactly 2pi") {
  const auto q = suspension(3, 0.8 * M_PI);
  REQUIRE(q.vertices.size() == 2);
  for (double a : cone_angles(q)) CHECK(a == doctest::Approx(2.4 * M_PI));
  const auto rep = check_admissible(q, 9);
  CHECK(rep.cone_angle_check.pass);  // both cone angles exceed 2pi
  REQUIRE(rep.geodesic_check.verdict == GeodesicVerdict::Refuted);
  CHECK(rep.geodesic_check.witness_length == doctest::Approx(2 * M_PI).epsilon(1e-6));
}

TEST_CASE("euclidean limit: cone angles approach 2pi for shrinking polyhedra") {
  double prev = 1e9;
  for (double s : {0.4, 0.04, 0.004}) {
    const auto p = build_from_halfspaces(catalog::hexahedron_halfspaces(s));
    const auto q = gauss_image(p);
    double excess = 0.0;
    for (double a : cone_angles(q)) excess = std::max(excess, a - 2 * M_PI);
    CHECK(excess > 0.0);
    CHECK(excess < prev);
    prev = excess;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("ideal octahedron: hemisphere cells and ideal admissibility") {
  const auto p = build_from_halfspaces(catalog::ideal_octahedron_halfspaces());
  const auto q = gauss_image(p);
  CHECK(q.cells.size() == 6);
  for (const auto& cell : q.cells) {
    CHECK(cell.size() == 4);
    CHECK(cell.perimeter() == doctest::Approx(2 * M_PI).epsilon(1e-9));
    for (double a : cell.interior_angles) CHECK(a == doctest::Approx(M_PI));
  }
  const Report rep = check_ideally_admissible(q);
  for (const auto& c : rep.conditions) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("ideal cube polar is also ideally admissible") {
  const auto p = build_from_halfspaces(catalog::hexahedron_halfspaces(1.0 / std::sqrt(3.0)));
  const auto q = gauss_image(p);
  CHECK(q.cells.size() == 8);
  CHECK(check_ideally_admissible(q).ok());
}

TEST_CASE("three hemisphere cells cannot be ideally admissible") {
  const auto q = triple_banana();
  const Report rep = check_ideally_admissible(q);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.find("gluing-lengths")->pass);  // every gluing has length pi
}

TEST_CASE("compact polar fails ideal admissibility") {
  const auto p = build_from_halfspaces(catalog::tetrahedron_halfspaces(0.28));
  const auto q = gauss_image(p);
  CHECK_FALSE(check_ideally_admissible(q).ok());
}

TEST_CASE("t-expansion of the ideal octahedron polar") {
  const auto p = build_from_halfspaces(catalog::ideal_octahedron_halfspaces());
  const auto q = gauss_image(p);
  CHECK(longest_skeleton_edge(q) == doctest::Approx(M_PI / 2));

  // Range checks: the admissible window is (0, pi/e1 - 1) = (0, 1).
  CHECK_THROWS_AS(t_expansion(q, 0.0), InvalidInput);
  CHECK_THROWS_AS(t_expansion(q, 1.0), InvalidInput);
  CHECK_THROWS_AS(t_expansion(q, -0.2), InvalidInput);

  const auto qt = t_expansion(q, 0.1);
  CHECK(qt.cells.size() == 24);
  CHECK(qt.euler_characteristic() == 2);

  // Special cone points sit at the old cell centers with angle exactly 2(1+t)pi;
  // ordinary cone points keep angle (degree) * pi >= 3pi.
  int special = 0, ordinary = 0;
  for (double a : cone_angles(qt)) {
    if (std::abs(a - 2.2 * M_PI) < 1e-12) {
      ++special;
    } else {
      CHECK(a == doctest::Approx(3 * M_PI).epsilon(1e-9));
      ++ordinary;
    }
  }
  CHECK(special == 6);
  CHECK(ordinary == 8);

  // Cellwise convergence as t -> 0+.
  const auto q_small = t_expansion(q, 1e-9);
  for (std::size_t c = 0; c < q_small.cells.size(); ++c)
    CHECK(q_small.cells[c].side_lengths[0] ==
          doctest::Approx(M_PI / 2).epsilon(1e-8));

  // The expansion is admissible (certified at desk depth).
  const auto rep = check_admissible(qt, 16);
  CHECK(rep.conditions_1_to_3());
  CHECK(rep.geodesic_check.verdict == GeodesicVerdict::Certified);
}

TEST_CASE("gauss image of the right-angled dodecahedron is certified admissible") {
  const auto p = build_from_halfspaces(catalog::right_angled_dodecahedron_halfspaces());
  const auto q = gauss_image(p);
  CHECK(q.cells.size() == 20);
  // Cone angles: 2pi + area of a right-angled pentagon = 2pi + pi/2.
  for (double a : cone_angles(q)) CHECK(a == doctest::Approx(2.5 * M_PI).epsilon(1e-9));
  const auto rep = check_admissible(q, 20);
  CHECK(rep.conditions_1_to_3());
  CHECK(rep.geodesic_check.verdict == GeodesicVerdict::Certified);
}
