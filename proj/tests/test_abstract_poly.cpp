#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpolar/abstract_poly.hpp"
#include "hpolar/catalog.hpp"

using namespace hpolar;

namespace {

AbstractPolyhedron two_disjoint_tetrahedra() {
  const AbstractPolyhedron t = catalog::tetrahedron();
  AbstractPolyhedron d = t;
  const CellId off = 100;
  for (const auto& v : t.vertices) d.vertices.push_back(v + off);
  for (const auto& e : t.edges) d.edges.push_back({e.id + off, e.tail + off, e.head + off});
  for (const auto& f : t.faces) {
    FaceRec fr;
    fr.id = f.id + off;
    for (const auto& s : f.boundary) fr.boundary.push_back({s.edge + off, s.sign});
    d.faces.push_back(fr);
  }
  return d;
}

}  // namespace

TEST_CASE("validate accepts the cube") {
  const Report rep = validate(catalog::cube());
  for (const auto& c : rep.conditions) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
}

TEST_CASE("validate rejects a flipped face") {
  AbstractPolyhedron cube = catalog::cube();
  for (auto& s : cube.faces[2].boundary) s.sign = -s.sign;  // break the cycle, keep order
  const Report rep = validate(cube);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.find("d-squared-zero")->pass);
  CHECK(rep.find("d-squared-zero")->witness.find(std::to_string(cube.faces[2].id)) !=
        std::string::npos);
}

TEST_CASE("validate flags a coherently reversed face at the edge pairing") {
  AbstractPolyhedron cube = catalog::cube();
  auto& b = cube.faces[1].boundary;
  std::reverse(b.begin(), b.end());
  for (auto& s : b) s.sign = -s.sign;  // still a cycle, orientation reversed
  const Report rep = validate(cube);
  CHECK(rep.find("d-squared-zero")->pass);
  CHECK_FALSE(rep.find("edge-face-incidence")->pass);
}

TEST_CASE("validate fails Euler check on two disjoint tetrahedra") {
  const Report rep = validate(two_disjoint_tetrahedra());
  CHECK_FALSE(rep.find("euler-characteristic")->pass);
  CHECK(rep.find("euler-characteristic")->witness.find("4") != std::string::npos);
}

TEST_CASE("poincare dual of the cube is the octahedron") {
  const AbstractPolyhedron dual = poincare_dual(catalog::cube());
  CHECK(dual.vertices.size() == 6);
  CHECK(dual.edges.size() == 12);
  CHECK(dual.faces.size() == 8);
  CHECK(validate(dual).ok());
  CHECK(isomorphic(dual, catalog::octahedron()));
}

TEST_CASE("tetrahedron is self-dual") {
  const AbstractPolyhedron t = catalog::tetrahedron();
  CHECK(isomorphic(poincare_dual(t), t));
}

TEST_CASE("dual of dual is the identity on the corpus") {
  for (const AbstractPolyhedron& p :
       {catalog::tetrahedron(), catalog::cube(), catalog::octahedron(),
        catalog::triangular_prism(), catalog::dodecahedron()}) {
    const AbstractPolyhedron dd = poincare_dual(poincare_dual(p));
    CHECK(isomorphic(dd, p));
    // Dual swaps V and F and keeps E.
    const AbstractPolyhedron d = poincare_dual(p);
    CHECK(d.vertices.size() == p.faces.size());
    CHECK(d.faces.size() == p.vertices.size());
    CHECK(d.edges.size() == p.edges.size());
    CHECK(validate(d).ok());
  }
}

TEST_CASE("steinitz on corpus skeletons and their duals") {
  for (const AbstractPolyhedron& p :
       {catalog::tetrahedron(), catalog::cube(), catalog::octahedron(),
        catalog::triangular_prism(), catalog::dodecahedron()}) {
    CHECK(is_steinitz(one_skeleton(p)));
    CHECK(is_steinitz(one_skeleton(poincare_dual(p))));
  }
}

TEST_CASE("steinitz rejects K5 and paths") {
  SimpleGraph k5;
  k5.n = 5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.edges.emplace_back(i, j);
  CHECK_FALSE(is_planar(k5));
  CHECK(is_three_connected(k5));
  CHECK_FALSE(is_steinitz(k5));

  SimpleGraph path;
  path.n = 5;
  for (int i = 0; i + 1 < 5; ++i) path.edges.emplace_back(i, i + 1);
  CHECK(is_planar(path));
  CHECK_FALSE(is_three_connected(path));
  CHECK_FALSE(is_steinitz(path));

  // K4 is the smallest polyhedral graph.
  SimpleGraph k4;
  k4.n = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.edges.emplace_back(i, j);
  CHECK(is_steinitz(k4));
}

TEST_CASE("stellation counts") {
  const AbstractPolyhedron sc = stellate(catalog::cube());
  CHECK(sc.vertices.size() == 14);
  CHECK(sc.edges.size() == 36);
  CHECK(sc.faces.size() == 24);
  CHECK(validate(sc).ok());

  const AbstractPolyhedron st = stellate(catalog::tetrahedron());
  CHECK(st.vertices.size() == 8);
  CHECK(st.edges.size() == 18);
  CHECK(st.faces.size() == 12);
  CHECK(validate(st).ok());

  for (const auto& f : sc.faces) CHECK(f.boundary.size() == 3);
  for (const auto& f : st.faces) CHECK(f.boundary.size() == 3);
}

TEST_CASE("stellation inscribability necessary criterion") {
  const auto octa = stellation_inscribable_necessary(catalog::octahedron());
  CHECK_FALSE(octa.not_excluded);  // V=6 <= F=8

  const auto cube = stellation_inscribable_necessary(catalog::cube());
  CHECK(cube.not_excluded);  // V=8 > F=6

  // All-triangular polyhedra with V > 3 always fail: F = 2V - 4 >= V.
  const auto tet = stellation_inscribable_necessary(catalog::tetrahedron());
  CHECK_FALSE(tet.not_excluded);
  const auto stp = stellation_inscribable_necessary(stellate(catalog::triangular_prism()));
  CHECK_FALSE(stp.not_excluded);
}

TEST_CASE("isomorphism distinguishes non-isomorphic solids") {
  CHECK_FALSE(isomorphic(catalog::cube(), catalog::octahedron()));
  CHECK_FALSE(isomorphic(catalog::cube(), catalog::triangular_prism()));
  CHECK(isomorphic(catalog::cube(), catalog::cube()));
  // The cube has 48 flag symmetries (including reflections).
  CHECK(all_isomorphisms(catalog::cube(), catalog::cube()).size() == 48);
}
