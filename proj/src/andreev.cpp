#include "hpolar/andreev.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "hpolar/minkowski.hpp"

namespace hpolar {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// Vertices shared by all faces of the given index set.
bool faces_share_a_vertex(const Topology& t, const std::vector<int>& faces) {
  std::set<int> common(t.face_vertices[std::size_t(faces[0])].begin(),
                       t.face_vertices[std::size_t(faces[0])].end());
  for (std::size_t i = 1; i < faces.size() && !common.empty(); ++i) {
    std::set<int> next;
    for (int v : t.face_vertices[std::size_t(faces[i])])
      if (common.count(v)) next.insert(v);
    common = std::move(next);
  }
  return !common.empty();
}

std::vector<CellId> canonical_cycle(std::vector<CellId> c) {
  std::vector<CellId> best;
  const std::size_t n = c.size();
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<CellId> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = c[(r + i) % n];
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

}  // namespace

std::vector<PrismaticElement> prismatic_elements(const AbstractPolyhedron& p, int k) {
  if (k != 3 && k != 4) throw InvalidInput("prismatic_elements: k must be 3 or 4");
  const Topology t = topology_of(p);
  const int nf = int(p.faces.size());

  // Adjacency via shared edges (a valid polyhedron has at most one shared edge).
  std::map<std::pair<int, int>, int> shared_edge;
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    const auto& ef = t.edge_faces[e];
    shared_edge[{std::min(ef[0].first, ef[1].first), std::max(ef[0].first, ef[1].first)}] =
        int(e);
  }
  auto adjacent = [&](int f, int g) {
    return shared_edge.count({std::min(f, g), std::max(f, g)}) > 0;
  };

  std::set<std::vector<CellId>> seen;
  std::vector<PrismaticElement> out;
  std::vector<int> seq;

  std::function<void(int)> extend = [&](int depth) {
    if (depth == k) {
      if (!adjacent(seq.back(), seq.front())) return;
      // No three of the faces share a common point.
      std::vector<int> idx(seq.begin(), seq.end());
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
          for (std::size_t l = j + 1; l < idx.size(); ++l)
            if (faces_share_a_vertex(t, {idx[i], idx[j], idx[l]})) return;
      std::vector<CellId> ids;
      for (int f : seq) ids.push_back(p.faces[std::size_t(f)].id);
      const std::vector<CellId> canon = canonical_cycle(ids);
      if (!seen.insert(canon).second) return;
      PrismaticElement el;
      el.faces = ids;
      for (int i = 0; i < k; ++i) {
        const int f = seq[std::size_t(i)], g = seq[std::size_t((i + 1) % k)];
        el.edges.push_back(
            p.edges[std::size_t(shared_edge.at({std::min(f, g), std::max(f, g)}))].id);
      }
      out.push_back(std::move(el));
      return;
    }
    for (int f = 0; f < nf; ++f) {
      if (std::find(seq.begin(), seq.end(), f) != seq.end()) continue;
      if (!adjacent(seq.back(), f)) continue;
      seq.push_back(f);
      extend(depth + 1);
      seq.pop_back();
    }
  };
  for (int f = 0; f < nf; ++f) {
    seq.assign(1, f);
    extend(1);
  }
  return out;
}

Report check_andreev(const AbstractPolyhedron& p, const AngleAssignment& a) {
  const Topology t = topology_of(p);
  if (p.vertices.size() == 4 && p.faces.size() == 4)
    throw InvalidInput("check_andreev: the simplex is out of scope");

  for (const auto& e : p.edges)
    if (!a.angles.count(e.id))
      throw InvalidInput("check_andreev: edge " + std::to_string(e.id) + " has no angle");

  Report rep;

  // Condition 0: trivalent vertices (forced by the link lemma when all angles
  // are at most pi/2).
  {
    bool ok = true;
    std::string w;
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (t.edges_around[v].size() != 3) {
        ok = false;
        w = "vertex " + std::to_string(p.vertices[v]) + " has degree " +
            std::to_string(t.edges_around[v].size());
        break;
      }
    rep.add("trivalent", ok, w);
  }

  // Condition 1: 0 < alpha <= pi/2.
  {
    bool ok = true;
    std::string w;
    for (const auto& e : p.edges) {
      const double al = a.angles.at(e.id);
      if (!(al > kStrictTol && al <= M_PI / 2 + kStrictTol)) {
        ok = false;
        w = "edge " + std::to_string(e.id) + " has angle " + fmt(al);
        break;
      }
    }
    rep.add("angle-range", ok, w);
  }

  // Condition 2: angle sums at vertices exceed pi strictly.
  {
    bool ok = true;
    std::string w;
    for (std::size_t v = 0; v < p.vertices.size() && ok; ++v) {
      double sum = 0.0;
      for (int e : t.edges_around[v]) sum += a.angles.at(p.edges[std::size_t(e)].id);
      if (sum <= M_PI + kStrictTol) {
        ok = false;
        w = "vertex " + std::to_string(p.vertices[v]) + " has angle sum " + fmt(sum) +
            (std::abs(sum - M_PI) <= kStrictTol ? " (boundary violation)" : "");
      }
    }
    rep.add("vertex-sums", ok, w);
  }

  // Conditions 3 and 4: prismatic element sums.
  for (int k : {3, 4}) {
    const double bound = k == 3 ? M_PI : 2.0 * M_PI;
    bool ok = true;
    std::string w;
    for (const auto& el : prismatic_elements(p, k)) {
      double sum = 0.0;
      for (CellId e : el.edges) sum += a.angles.at(e);
      if (sum >= bound - kStrictTol) {
        ok = false;
        std::string ids;
        for (std::size_t i = 0; i < el.faces.size(); ++i)
          ids += (i ? "," : "") + std::to_string(el.faces[i]);
        w = std::to_string(k) + "-prismatic element [" + ids + "] has angle sum " + fmt(sum) +
            (std::abs(sum - bound) <= kStrictTol ? " (boundary violation)" : "");
        break;
      }
    }
    rep.add(k == 3 ? "prismatic-3" : "prismatic-4", ok, w);
  }

  // Condition 5, in its dual form: the dual metric must not contain a vertex whose
  // star is four triangles with opposite sides of length pi/2.
  {
    const bool prereq = rep.find("trivalent")->pass && rep.find("angle-range")->pass;
    if (!prereq) {
      rep.add("dual-configuration", false, "not evaluated: trivalence or angle range failed");
    } else {
      try {
        const ConeMetricSurface dual = dual_andreev_metric(p, a);
        const Report dual_rep = check_dual_andreev(dual);
        const CheckResult* c3 = dual_rep.find("dual-3-star");
        rep.add("dual-configuration", c3->pass, c3->witness);
      } catch (const std::exception& e) {
        rep.add("dual-configuration", false, std::string("dual metric construction failed: ") +
                                                 e.what());
      }
    }
  }

  return rep;
}

ConeMetricSurface dual_andreev_metric(const AbstractPolyhedron& p, const AngleAssignment& a) {
  const Topology t = topology_of(p);
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    if (t.edges_around[v].size() != 3)
      throw InvalidInput("dual_andreev_metric: polyhedron is not trivalent");

  std::vector<SphericalPolygon> cells;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& edges = t.edges_around[v];
    std::vector<double> sides(3), angles(3);
    for (int i = 0; i < 3; ++i)
      sides[std::size_t(i)] = M_PI - a.angles.at(p.edges[std::size_t(edges[std::size_t(i)])].id);
    for (int i = 0; i < 3; ++i) {
      try {
        angles[std::size_t(i)] = spherical_angle_from_sides(
            sides[std::size_t((i + 1) % 3)], sides[std::size_t(i)], sides[std::size_t((i + 2) % 3)]);
      } catch (const InvalidInput&) {
        throw ConstructionError("dual_andreev_metric: sides at vertex " +
                                std::to_string(p.vertices[v]) +
                                " are not a spherical triangle");
      }
    }
    cells.emplace_back(std::move(sides), std::move(angles));
  }

  std::vector<Gluing> gluings;
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    const int tail = t.vindex.at(p.edges[e].tail);
    const int head = t.vindex.at(p.edges[e].head);
    auto position = [&](int v) {
      const auto& edges = t.edges_around[std::size_t(v)];
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == int(e)) return int(i);
      throw ConstructionError("dual_andreev_metric: edge missing from rotation");
    };
    gluings.push_back({tail, position(tail), head, position(head)});
  }
  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

Report check_dual_andreev(const ConeMetricSurface& q) {
  Report rep;

  // 1*: triangulated by convex spherical triangles with sides in [pi/2, pi).
  {
    bool ok = true;
    std::string w;
    for (std::size_t c = 0; c < q.cells.size() && ok; ++c) {
      if (q.cells[c].size() != 3) {
        ok = false;
        w = "cell " + std::to_string(c) + " is not a triangle";
        break;
      }
      for (double s : q.cells[c].side_lengths)
        if (s < M_PI / 2 - kStrictTol || s >= M_PI - kStrictTol) {
          ok = false;
          w = "cell " + std::to_string(c) + " has side " + fmt(s) + " outside [pi/2, pi)";
        }
      if (ok && q.cells[c].perimeter() >= 2.0 * M_PI) {
        ok = false;
        w = "cell " + std::to_string(c) + " is not convex (perimeter >= 2pi)";
      }
      if (ok && forward_walk_residual(q.cells[c]) > 1e-7) {
        ok = false;
        w = "cell " + std::to_string(c) + " does not close on the sphere";
      }
    }
    rep.add("dual-triangulation", ok, w);
  }

  bool triangulated = true;
  for (const auto& c : q.cells) triangulated = triangulated && c.size() == 3;
  if (!triangulated) {
    rep.add("dual-skeleton-cycles", false, "not evaluated: surface is not triangulated");
    rep.add("dual-3-star", false, "not evaluated: surface is not triangulated");
    return rep;
  }

  // Helper data for the skeleton conditions.
  struct End {
    int vertex;
    int rotation_index;  // position of the edge in the vertex rotation
  };
  const std::size_t ng = q.gluings.size();
  std::vector<std::array<End, 2>> ends(ng);
  std::vector<double> elen(ng);
  {
    std::map<std::pair<int, int>, int> gluing_of_side;
    for (std::size_t g = 0; g < ng; ++g) {
      gluing_of_side[{q.gluings[g].cell_a, q.gluings[g].side_a}] = int(g);
      gluing_of_side[{q.gluings[g].cell_b, q.gluings[g].side_b}] = int(g);
      elen[g] = q.side_length(q.gluings[g].cell_a, q.gluings[g].side_a);
    }
    std::vector<int> filled(ng, 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      const auto& corners = q.vertices[v].corners;
      for (std::size_t m = 0; m < corners.size(); ++m) {
        const auto [c, k] = corners[m];
        const int n = int(q.cells[std::size_t(c)].size());
        const int g = gluing_of_side.at({c, (k + n - 1) % n});
        ends[std::size_t(g)][std::size_t(filled[std::size_t(g)]++)] = {int(v), int(m)};
      }
    }
  }

  // Geodesy of a skeleton cycle at a vertex (Lemma 5.4 form): the두 cycle edges
  // split the star into two fans; a single triangle on one side breaks geodesy.
  auto fan_sizes = [&](int vertex, int rot_a, int rot_b) {
    const int deg = int(q.vertices[std::size_t(vertex)].corners.size());
    const int d1 = ((rot_b - rot_a) % deg + deg) % deg;
    return std::make_pair(d1, deg - d1);
  };

  // 2*: geodesic cycles of 3 or 4 skeleton edges are longer than 2pi.
  {
    bool ok = true;
    std::string w;
    std::vector<std::vector<std::pair<int, int>>> incident(q.vertices.size());
    for (std::size_t g = 0; g < ng; ++g) {
      incident[std::size_t(ends[g][0].vertex)].emplace_back(int(g), ends[g][1].vertex);
      incident[std::size_t(ends[g][1].vertex)].emplace_back(int(g), ends[g][0].vertex);
    }
    std::vector<int> cyc_edges, cyc_vertices;
    std::function<void(int, int)> dfs = [&](int root, int cur) {
      if (!ok) return;
      for (const auto& [g, other] : incident[std::size_t(cur)]) {
        if (!ok) return;
        if (std::count(cyc_edges.begin(), cyc_edges.end(), g)) continue;
        if (int(cyc_edges.size()) >= 4) continue;
        if (other == root && cyc_edges.size() >= 2) {
          cyc_edges.push_back(g);
          if (cyc_edges.size() == 3 || cyc_edges.size() == 4) {
            // Geodesy test at every cycle vertex.
            bool geodesic = true;
            double len = 0.0;
            for (std::size_t i = 0; i < cyc_edges.size() && geodesic; ++i) {
              len += elen[std::size_t(cyc_edges[i])];
              const int va = cyc_vertices[i];  // vertex between edge i-1 and edge i
              const int e_in = cyc_edges[(i + cyc_edges.size() - 1) % cyc_edges.size()];
              const int e_out = cyc_edges[i];
              auto rot_of = [&](int g2, int v2) {
                return ends[std::size_t(g2)][0].vertex == v2 ? ends[std::size_t(g2)][0].rotation_index
                                                             : ends[std::size_t(g2)][1].rotation_index;
              };
              const auto [f1, f2] = fan_sizes(va, rot_of(e_in, va), rot_of(e_out, va));
              if (std::min(f1, f2) < 2) geodesic = false;
            }
            if (geodesic && len <= 2.0 * M_PI + kStrictTol) {
              ok = false;
              std::string ids;
              for (std::size_t i = 0; i < cyc_edges.size(); ++i)
                ids += (i ? "," : "") + std::to_string(cyc_edges[i]);
              w = "geodesic skeleton cycle [" + ids + "] has length " + fmt(len) +
                  (std::abs(len - 2.0 * M_PI) <= kStrictTol ? " (boundary violation)" : "");
            }
          }
          cyc_edges.pop_back();
          continue;
        }
        if (other <= root) continue;
        if (std::count(cyc_vertices.begin(), cyc_vertices.end(), other)) continue;
        cyc_edges.push_back(g);
        cyc_vertices.push_back(other);
        dfs(root, other);
        cyc_vertices.pop_back();
        cyc_edges.pop_back();
      }
    };
    for (int root = 0; root < int(q.vertices.size()) && ok; ++root) {
      cyc_edges.clear();
      cyc_vertices.assign(1, root);
      dfs(root, root);
    }
    rep.add("dual-skeleton-cycles", ok, w);
  }

  // 3*: no vertex whose star is exactly four triangles, each with the opposite
  // side of length pi/2.
  {
    bool ok = true;
    std::string w;
    for (std::size_t v = 0; v < q.vertices.size() && ok; ++v) {
      const auto& corners = q.vertices[v].corners;
      if (corners.size() != 4) continue;
      bool all_half_pi = true;
      for (const auto& [c, k] : corners) {
        const double opposite = q.cells[std::size_t(c)].side_lengths[std::size_t((k + 1) % 3)];
        if (std::abs(opposite - M_PI / 2) > kStrictTol) all_half_pi = false;
      }
      if (all_half_pi) {
        ok = false;
        w = "vertex " + std::to_string(v) +
            " has a 4-triangle star with opposite sides pi/2 (cone angle exactly 2pi)";
      }
    }
    rep.add("dual-3-star", ok, w);
  }

  return rep;
}

}  // namespace hpolar
