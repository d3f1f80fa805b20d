#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hpolar/andreev.hpp"
#include "hpolar/catalog.hpp"
#include "hpolar/polar_checks.hpp"
#include "test_util.hpp"

using namespace hpolar;

namespace {

AngleAssignment uniform_angles(const AbstractPolyhedron& p, double alpha) {
  AngleAssignment a;
  for (const auto& e : p.edges) a.angles[e.id] = alpha;
  return a;
}

}  // namespace

TEST_CASE("prismatic elements of the cube") {
  const AbstractPolyhedron cube = catalog::cube();
  CHECK(prismatic_elements(cube, 3).empty());
  const auto quads = prismatic_elements(cube, 4);
  CHECK(quads.size() == 3);  // the three equatorial bands
  for (const auto& el : quads) {
    CHECK(el.faces.size() == 4);
    CHECK(el.edges.size() == 4);
  }
}

TEST_CASE("prismatic elements of the triangular prism") {
  const AbstractPolyhedron prism = catalog::triangular_prism();
  const auto tris = prismatic_elements(prism, 3);
  REQUIRE(tris.size() == 1);  // the band of three rectangles
  const Topology t = topology_of(prism);
  for (CellId f : tris[0].faces) {
    const int fi = t.findex.at(f);
    CHECK(t.face_vertices[std::size_t(fi)].size() == 4);  // rectangles only
  }
}

TEST_CASE("prismatic elements of the dodecahedron") {
  const AbstractPolyhedron d = catalog::dodecahedron();
  CHECK(prismatic_elements(d, 3).empty());
  CHECK(prismatic_elements(d, 4).empty());
}

TEST_CASE("right-angled dodecahedron is accepted") {
  const AbstractPolyhedron d = catalog::dodecahedron();
  const Report rep = check_andreev(d, uniform_angles(d, M_PI / 2));
  for (const auto& c : rep.conditions) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
  CHECK(rep.ok());
}

TEST_CASE("right-angled cube is rejected at the 4-prismatic boundary") {
  const AbstractPolyhedron cube = catalog::cube();
  const Report rep = check_andreev(cube, uniform_angles(cube, M_PI / 2));
  CHECK_FALSE(rep.ok());
  const CheckResult* p4 = rep.find("prismatic-4");
  REQUIRE(p4 != nullptr);
  CHECK_FALSE(p4->pass);
  CHECK(p4->witness.find("boundary violation") != std::string::npos);
  // The other numbered conditions hold.
  CHECK(rep.find("trivalent")->pass);
  CHECK(rep.find("angle-range")->pass);
  CHECK(rep.find("vertex-sums")->pass);
  CHECK(rep.find("prismatic-3")->pass);
}

TEST_CASE("vertex sum of exactly pi is rejected with the vertex as witness") {
  const AbstractPolyhedron prism = catalog::triangular_prism();
  const Topology t = topology_of(prism);
  AngleAssignment a = uniform_angles(prism, M_PI / 2);
  const CellId witness_vertex = prism.vertices[0];
  for (int e : t.edges_around[0]) a.angles[prism.edges[std::size_t(e)].id] = M_PI / 3;
  const Report rep = check_andreev(prism, a);
  CHECK_FALSE(rep.find("vertex-sums")->pass);
  CHECK(rep.find("vertex-sums")->witness.find(std::to_string(witness_vertex)) !=
        std::string::npos);
  CHECK(rep.find("vertex-sums")->witness.find("boundary") != std::string::npos);
}

TEST_CASE("non-trivalent polyhedron fails condition 0") {
  const AbstractPolyhedron octa = catalog::octahedron();
  const Report rep = check_andreev(octa, uniform_angles(octa, M_PI / 2));
  CHECK_FALSE(rep.find("trivalent")->pass);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("the simplex is out of scope") {
  const AbstractPolyhedron tet = catalog::tetrahedron();
  CHECK_THROWS_AS(check_andreev(tet, uniform_angles(tet, M_PI / 2)), InvalidInput);
}

TEST_CASE("dual andreev metric of right angles is an octant complex") {
  const AbstractPolyhedron d = catalog::dodecahedron();
  const ConeMetricSurface dual = dual_andreev_metric(d, uniform_angles(d, M_PI / 2));
  CHECK(dual.cells.size() == d.vertices.size());
  CHECK(dual.vertices.size() == d.faces.size());
  for (const auto& cell : dual.cells) {
    for (double s : cell.side_lengths) CHECK(s == doctest::Approx(M_PI / 2));
    for (double a : cell.interior_angles) CHECK(a == doctest::Approx(M_PI / 2));
    CHECK(cell.perimeter() < 2 * M_PI);
  }
  // It agrees with the Gauss image of the geometric right-angled dodecahedron.
  const auto geo = build_from_halfspaces(catalog::right_angled_dodecahedron_halfspaces());
  CHECK(isomorphic(surface_complex(dual), surface_complex(gauss_image(geo))));
}

TEST_CASE("lemma 5.3 property: angles dominate opposite sides") {
  const AbstractPolyhedron prism = catalog::triangular_prism();
  AngleAssignment a = uniform_angles(prism, 0.45 * M_PI);
  int k = 0;
  for (auto& [id, ang] : a.angles) ang = (0.30 + 0.025 * (k++ % 9)) * M_PI;  // <= pi/2
  const ConeMetricSurface dual = dual_andreev_metric(prism, a);
  for (const auto& cell : dual.cells)
    for (int i = 0; i < 3; ++i) {
      const double angle = cell.interior_angles[std::size_t(i)];
      const double opposite = cell.side_lengths[std::size_t((i + 1) % 3)];
      CHECK(angle >= opposite - 1e-12);
    }
}

TEST_CASE("dual conditions hold for the dodecahedron and fail for the octant sphere") {
  const AbstractPolyhedron d = catalog::dodecahedron();
  const ConeMetricSurface dual = dual_andreev_metric(d, uniform_angles(d, M_PI / 2));
  const Report good = check_dual_andreev(dual);
  for (const auto& c : good.conditions) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }

  // The octant sphere contains the forbidden 4-star and a geodesic 4-cycle of
  // length exactly 2pi.
  const ConeMetricSurface octants = testutil::octant_sphere();
  const Report bad = check_dual_andreev(octants);
  CHECK(bad.find("dual-triangulation")->pass);
  CHECK_FALSE(bad.find("dual-3-star")->pass);
  CHECK_FALSE(bad.find("dual-skeleton-cycles")->pass);
  CHECK(bad.find("dual-skeleton-cycles")->witness.find("boundary violation") !=
        std::string::npos);
}

TEST_CASE("accepted assignments yield admissible dual metrics") {
  // Hodgson's step 2 composed with Rivin's direction: the dual of an accepted
  // Andreev assignment is never refuted by the admissibility search.
  const AbstractPolyhedron d = catalog::dodecahedron();
  const AngleAssignment right = uniform_angles(d, M_PI / 2);
  REQUIRE(check_andreev(d, right).ok());
  const ConeMetricSurface dual = dual_andreev_metric(d, right);
  REQUIRE(check_dual_andreev(dual).ok());
  const auto adm = check_admissible(dual, 12);
  CHECK(adm.conditions_1_to_3());
  CHECK(adm.geodesic_check.verdict != GeodesicVerdict::Refuted);
  for (double a : cone_angles(dual)) CHECK(a > 2 * M_PI);
}

TEST_CASE("infeasible side triples are reported with the vertex") {
  const AbstractPolyhedron prism = catalog::triangular_prism();
  AngleAssignment a = uniform_angles(prism, M_PI / 2);
  // Tiny angles make sides close to pi; three sides near pi violate the spherical
  // triangle perimeter bound.
  const Topology t = topology_of(prism);
  for (int e : t.edges_around[0]) a.angles[prism.edges[std::size_t(e)].id] = 1e-3;
  CHECK_THROWS_AS(dual_andreev_metric(prism, a), ConstructionError);
}
