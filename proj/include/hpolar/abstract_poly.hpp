#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpolar/common.hpp"

namespace hpolar {

using CellId = std::int64_t;

struct EdgeRec {
  CellId id = 0;
  CellId tail = 0;
  CellId head = 0;
};

// One signed step of a face boundary: +1 traverses tail->head, -1 head->tail.
struct BoundaryStep {
  CellId edge = 0;
  int sign = +1;
};

struct FaceRec {
  CellId id = 0;
  std::vector<BoundaryStep> boundary;  // cyclic
};

// Three-level chain complex: the purely combinatorial polyhedron.
struct AbstractPolyhedron {
  std::vector<CellId> vertices;
  std::vector<EdgeRec> edges;
  std::vector<FaceRec> faces;
};

// Per-invariant pass/fail with offending cell ids as witnesses.
Report validate(const AbstractPolyhedron& p);

// Derived incidence caches for a validated polyhedron (index-based).
struct Topology {
  std::map<CellId, int> vindex, eindex, findex;

  // face_vertices[f][k] = vertex index at the tail of oriented boundary step k.
  std::vector<std::vector<int>> face_vertices;
  // edge_faces[e] = the two (face index, sign) incidences, sign +1 listed first.
  std::vector<std::array<std::pair<int, int>, 2>> edge_faces;
  // Cyclic rotation around each vertex: edges_around[v][m] and faces_around[v][m],
  // where faces_around[v][m] lies between edges_around[v][m] and edges_around[v][m+1].
  std::vector<std::vector<int>> edges_around;
  std::vector<std::vector<int>> faces_around;
};

// Throws ConstructionError when the polyhedron does not validate.
Topology topology_of(const AbstractPolyhedron& p);

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

SimpleGraph one_skeleton(const AbstractPolyhedron& p);

bool is_planar(const SimpleGraph& g);
bool is_three_connected(const SimpleGraph& g);
// Steinitz: 1-skeleton of a convex polyhedron iff planar and 3-connected.
bool is_steinitz(const SimpleGraph& g);

// Faces <-> vertices, edges <-> edges.
AbstractPolyhedron poincare_dual(const AbstractPolyhedron& p);

// Replaces every face by a fan of triangles over a fresh apex vertex.
AbstractPolyhedron stellate(const AbstractPolyhedron& p);

struct PolyIsomorphism {
  std::map<CellId, CellId> vertex_map, edge_map, face_map;
};

// Incidence-preserving bijections found by flag propagation (includes reflections).
std::vector<PolyIsomorphism> all_isomorphisms(const AbstractPolyhedron& a,
                                              const AbstractPolyhedron& b,
                                              std::size_t limit = SIZE_MAX);
bool isomorphic(const AbstractPolyhedron& a, const AbstractPolyhedron& b);

struct InscribabilityVerdict {
  bool not_excluded = false;  // false: the stellation cannot be inscribed
  std::string reason;
};

// Necessary criterion only: when V(P) <= F(P) the stellation cannot be inscribed.
InscribabilityVerdict stellation_inscribable_necessary(const AbstractPolyhedron& p);

}  // namespace hpolar
