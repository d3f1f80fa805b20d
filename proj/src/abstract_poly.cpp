#include "hpolar/abstract_poly.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace hpolar {

namespace {

std::string id_str(CellId id) { return std::to_string(id); }

struct IndexMaps {
  std::map<CellId, int> vindex, eindex, findex;
  bool ok = true;
  std::string dup_witness;
};

IndexMaps build_indices(const AbstractPolyhedron& p) {
  IndexMaps m;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (!m.vindex.emplace(p.vertices[i], int(i)).second) {
      m.ok = false;
      m.dup_witness = "duplicate vertex id " + id_str(p.vertices[i]);
    }
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (!m.eindex.emplace(p.edges[i].id, int(i)).second) {
      m.ok = false;
      m.dup_witness = "duplicate edge id " + id_str(p.edges[i].id);
    }
  for (std::size_t i = 0; i < p.faces.size(); ++i)
    if (!m.findex.emplace(p.faces[i].id, int(i)).second) {
      m.ok = false;
      m.dup_witness = "duplicate face id " + id_str(p.faces[i].id);
    }
  return m;
}

// Oriented endpoints of a boundary step.
std::pair<CellId, CellId> step_ends(const AbstractPolyhedron& p, const IndexMaps& m,
                                    const BoundaryStep& s) {
  const EdgeRec& e = p.edges[std::size_t(m.eindex.at(s.edge))];
  return s.sign > 0 ? std::make_pair(e.tail, e.head) : std::make_pair(e.head, e.tail);
}

}  // namespace

Report validate(const AbstractPolyhedron& p) {
  Report rep;
  IndexMaps m = build_indices(p);

  // Structural resolvability.
  {
    bool ok = m.ok;
    std::string w = m.dup_witness;
    for (const auto& e : p.edges) {
      if (!m.vindex.count(e.tail) || !m.vindex.count(e.head)) {
        ok = false;
        w = "edge " + id_str(e.id) + " references missing vertex";
      } else if (e.tail == e.head) {
        ok = false;
        w = "edge " + id_str(e.id) + " is a loop";
      }
    }
    for (const auto& f : p.faces) {
      if (f.boundary.size() < 3) {
        ok = false;
        w = "face " + id_str(f.id) + " has fewer than 3 boundary edges";
      }
      for (const auto& s : f.boundary) {
        if (!m.eindex.count(s.edge)) {
          ok = false;
          w = "face " + id_str(f.id) + " references missing edge " + id_str(s.edge);
        }
        if (s.sign != 1 && s.sign != -1) {
          ok = false;
          w = "face " + id_str(f.id) + " has a sign other than +-1";
        }
      }
    }
    rep.add("structure", ok, w);
    if (!ok) return rep;  // later checks would dereference bad ids
  }

  // d^2 = 0, computed literally on the chain complex, plus cyclic consistency of
  // each boundary (head of each step is the tail of the next, one closed walk,
  // no repeated edges or vertices within a face).
  {
    bool ok = true;
    std::string w;
    for (const auto& f : p.faces) {
      std::map<CellId, int> dd;  // 0-chain coefficients of d(d(f))
      for (const auto& s : f.boundary) {
        auto [a, b] = step_ends(p, m, s);
        dd[b] += 1;
        dd[a] -= 1;
      }
      bool zero = true;
      for (auto& [v, c] : dd)
        if (c != 0) zero = false;
      bool chained = true;
      std::set<CellId> used_edges, seen_tails;
      for (std::size_t k = 0; k < f.boundary.size(); ++k) {
        auto [a, b] = step_ends(p, m, f.boundary[k]);
        auto [c, d] = step_ends(p, m, f.boundary[(k + 1) % f.boundary.size()]);
        (void)d;
        if (b != c) chained = false;
        if (!used_edges.insert(f.boundary[k].edge).second) chained = false;
        if (!seen_tails.insert(a).second) chained = false;
      }
      if (!zero || !chained) {
        ok = false;
        w = "face " + id_str(f.id) + (zero ? " boundary is not a single cycle" : " has d(d(f)) != 0");
      }
    }
    rep.add("d-squared-zero", ok, w);
  }

  // Every edge lies in exactly two faces with opposite induced orientations.
  {
    bool ok = true;
    std::string w;
    std::map<CellId, std::vector<int>> uses;
    for (const auto& f : p.faces)
      for (const auto& s : f.boundary) uses[s.edge].push_back(s.sign);
    for (const auto& e : p.edges) {
      auto it = uses.find(e.id);
      const bool good = it != uses.end() && it->second.size() == 2 &&
                        it->second[0] + it->second[1] == 0;
      if (!good) {
        ok = false;
        w = "edge " + id_str(e.id) + " is not used by exactly two faces with opposite signs";
      }
    }
    rep.add("edge-face-incidence", ok, w);
  }

  // Euler characteristic.
  {
    const long chi = long(p.vertices.size()) - long(p.edges.size()) + long(p.faces.size());
    rep.add("euler-characteristic", chi == 2,
            chi == 2 ? "" : "V - E + F = " + std::to_string(chi));
  }

  // Steinitz: the 1-skeleton is a 3-connected planar (simple) graph.
  {
    SimpleGraph g = one_skeleton(p);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (auto [a, b] : g.edges)
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second) simple = false;
    const bool ok = simple && is_steinitz(g);
    rep.add("steinitz", ok, ok ? "" : (simple ? "1-skeleton is not a 3-connected planar graph"
                                              : "1-skeleton has parallel edges"));
  }

  return rep;
}

Topology topology_of(const AbstractPolyhedron& p) {
  Report rep = validate(p);
  if (!rep.ok()) {
    std::string why;
    for (const auto& c : rep.conditions)
      if (!c.pass) why += c.name + (c.witness.empty() ? "" : " (" + c.witness + ")") + "; ";
    throw ConstructionError("invalid polyhedron: " + why);
  }

  IndexMaps m = build_indices(p);
  Topology t;
  t.vindex = m.vindex;
  t.eindex = m.eindex;
  t.findex = m.findex;

  t.face_vertices.resize(p.faces.size());
  for (std::size_t fi = 0; fi < p.faces.size(); ++fi)
    for (const auto& s : p.faces[fi].boundary)
      t.face_vertices[fi].push_back(m.vindex.at(step_ends(p, m, s).first));

  t.edge_faces.assign(p.edges.size(), {std::make_pair(-1, 0), std::make_pair(-1, 0)});
  for (std::size_t fi = 0; fi < p.faces.size(); ++fi)
    for (const auto& s : p.faces[fi].boundary) {
      auto& ef = t.edge_faces[std::size_t(m.eindex.at(s.edge))];
      (s.sign > 0 ? ef[0] : ef[1]) = {int(fi), s.sign};
    }

  // Corner walk around each vertex. A corner of face f at boundary position k sits
  // at the tail vertex of step k; its outgoing edge is step k's edge. The next
  // corner around the vertex lies in the other face of that edge.
  struct Corner {
    int face, pos;
  };
  std::map<std::pair<int, int>, Corner> next_corner;  // keyed by (face, pos)
  auto corner_vertex = [&](int f, int k) { return t.face_vertices[std::size_t(f)][std::size_t(k)]; };
  auto face_size = [&](int f) { return int(p.faces[std::size_t(f)].boundary.size()); };

  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    for (int k = 0; k < face_size(int(fi)); ++k) {
      const BoundaryStep& s = p.faces[fi].boundary[std::size_t(k)];
      const int e = m.eindex.at(s.edge);
      const auto& ef = t.edge_faces[std::size_t(e)];
      const int other_face = s.sign > 0 ? ef[1].first : ef[0].first;
      // Find the position of edge e in the other face; the corner there at the same
      // vertex is one past that position.
      const auto& ob = p.faces[std::size_t(other_face)].boundary;
      int opos = -1;
      for (int j = 0; j < int(ob.size()); ++j)
        if (m.eindex.at(ob[std::size_t(j)].edge) == e) opos = j;
      const int arrive = (opos + 1) % int(ob.size());
      next_corner[{int(fi), k}] = Corner{other_face, arrive};
    }
  }

  t.edges_around.resize(p.vertices.size());
  t.faces_around.resize(p.vertices.size());
  std::set<std::pair<int, int>> visited;
  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    for (int k = 0; k < face_size(int(fi)); ++k) {
      if (visited.count({int(fi), k})) continue;
      const int v = corner_vertex(int(fi), k);
      std::vector<int> edges_cycle, faces_cycle;
      int cf = int(fi), ck = k;
      do {
        visited.insert({cf, ck});
        const int e = m.eindex.at(p.faces[std::size_t(cf)].boundary[std::size_t(ck)].edge);
        edges_cycle.push_back(e);
        const Corner nc = next_corner.at({cf, ck});
        cf = nc.face;
        ck = nc.pos;
        faces_cycle.push_back(cf);  // face between this crossed edge and the next
        if (corner_vertex(cf, ck) != v)
          throw ConstructionError("corner walk left its vertex; inconsistent orientation");
      } while (!(cf == int(fi) && ck == k));
      if (!t.edges_around[std::size_t(v)].empty())
        throw ConstructionError("vertex " + id_str(p.vertices[std::size_t(v)]) +
                                " has a disconnected corner fan");
      t.edges_around[std::size_t(v)] = std::move(edges_cycle);
      t.faces_around[std::size_t(v)] = std::move(faces_cycle);
    }
  }

  return t;
}

SimpleGraph one_skeleton(const AbstractPolyhedron& p) {
  IndexMaps m = build_indices(p);
  SimpleGraph g;
  g.n = int(p.vertices.size());
  for (const auto& e : p.edges)
    g.edges.emplace_back(m.vindex.at(e.tail), m.vindex.at(e.head));
  return g;
}

bool is_planar(const SimpleGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(std::size_t(g.n));
  for (auto [a, b] : g.edges) boost::add_edge(std::size_t(a), std::size_t(b), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

bool connected_without(const SimpleGraph& g, int skip1, int skip2) {
  std::vector<std::vector<int>> adj(std::size_t(g.n));
  for (auto [a, b] : g.edges) {
    if (a == skip1 || a == skip2 || b == skip1 || b == skip2) continue;
    adj[std::size_t(a)].push_back(b);
    adj[std::size_t(b)].push_back(a);
  }
  int start = -1, expected = 0;
  for (int v = 0; v < g.n; ++v)
    if (v != skip1 && v != skip2) {
      if (start < 0) start = v;
      ++expected;
    }
  if (start < 0) return true;
  std::vector<char> seen(std::size_t(g.n), 0);
  std::queue<int> q;
  q.push(start);
  seen[std::size_t(start)] = 1;
  int count = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++count;
    for (int w : adj[std::size_t(v)])
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        q.push(w);
      }
  }
  return count == expected;
}

}  // namespace

bool is_three_connected(const SimpleGraph& g) {
  if (g.n <= 3) return false;
  if (!connected_without(g, -1, -1)) return false;
  for (int u = 0; u < g.n; ++u)
    if (!connected_without(g, u, -1)) return false;
  for (int u = 0; u < g.n; ++u)
    for (int w = u + 1; w < g.n; ++w)
      if (!connected_without(g, u, w)) return false;
  return true;
}

bool is_steinitz(const SimpleGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b) return false;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  return is_planar(g) && is_three_connected(g);
}

AbstractPolyhedron poincare_dual(const AbstractPolyhedron& p) {
  Topology t = topology_of(p);

  AbstractPolyhedron d;
  for (const auto& f : p.faces) d.vertices.push_back(f.id);
  // Dual edge keeps the primal id and runs from the +1 face to the -1 face.
  for (std::size_t ei = 0; ei < p.edges.size(); ++ei) {
    const auto& ef = t.edge_faces[ei];
    d.edges.push_back({p.edges[ei].id, p.faces[std::size_t(ef[0].first)].id,
                       p.faces[std::size_t(ef[1].first)].id});
  }
  // Dual face per vertex: crossed edges in rotation order; the step over edge e
  // runs from the corner face before e to the face after it.
  for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
    FaceRec df;
    df.id = p.vertices[vi];
    const auto& edges_cycle = t.edges_around[vi];
    const auto& faces_cycle = t.faces_around[vi];
    const std::size_t deg = edges_cycle.size();
    for (std::size_t m = 0; m < deg; ++m) {
      const int e = edges_cycle[m];
      const int to_face = faces_cycle[m];
      const auto& ef = t.edge_faces[std::size_t(e)];
      const int sign = (ef[1].first == to_face) ? +1 : -1;  // dual edge heads to -1 face
      df.boundary.push_back({p.edges[std::size_t(e)].id, sign});
    }
    d.faces.push_back(std::move(df));
  }
  return d;
}

AbstractPolyhedron stellate(const AbstractPolyhedron& p) {
  Topology t = topology_of(p);

  CellId next_id = 1;
  for (const auto& v : p.vertices) next_id = std::max(next_id, v + 1);
  for (const auto& e : p.edges) next_id = std::max(next_id, e.id + 1);
  for (const auto& f : p.faces) next_id = std::max(next_id, f.id + 1);

  AbstractPolyhedron s;
  s.vertices = p.vertices;
  s.edges = p.edges;

  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const FaceRec& f = p.faces[fi];
    const CellId apex = next_id++;
    s.vertices.push_back(apex);
    // One spoke per boundary vertex, directed vertex -> apex.
    std::vector<CellId> spoke(f.boundary.size());
    for (std::size_t k = 0; k < f.boundary.size(); ++k) {
      const CellId vk = p.vertices[std::size_t(t.face_vertices[fi][k])];
      spoke[k] = next_id++;
      s.edges.push_back({spoke[k], vk, apex});
    }
    // Triangle per boundary step: step k runs v_k -> v_{k+1}.
    for (std::size_t k = 0; k < f.boundary.size(); ++k) {
      const std::size_t k1 = (k + 1) % f.boundary.size();
      FaceRec tri;
      tri.id = next_id++;
      tri.boundary.push_back(f.boundary[k]);
      tri.boundary.push_back({spoke[k1], +1});
      tri.boundary.push_back({spoke[k], -1});
      s.faces.push_back(std::move(tri));
    }
  }
  return s;
}

namespace {

// A flag is a mutually incident (vertex, edge, face) triple; we also keep the
// boundary position so the involutions are cheap to compute.
struct FlagStructure {
  struct Flag {
    int v, e, f;
    int s0, s1, s2;  // adjacent flag indices
  };
  std::vector<Flag> flags;
  int nv, ne, nf;
};

FlagStructure build_flags(const AbstractPolyhedron& p, const Topology& t) {
  FlagStructure fs;
  fs.nv = int(p.vertices.size());
  fs.ne = int(p.edges.size());
  fs.nf = int(p.faces.size());

  // Two flags per (face, boundary position): at the tail and head of the step.
  std::map<std::tuple<int, int, int>, int> index;  // (face, pos, end) -> flag
  auto key = [](int f, int k, int end) { return std::make_tuple(f, k, end); };

  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const auto& fb = p.faces[fi].boundary;
    for (int k = 0; k < int(fb.size()); ++k) {
      for (int end = 0; end < 2; ++end) {
        const int e = t.eindex.at(fb[std::size_t(k)].edge);
        const auto& er = p.edges[std::size_t(e)];
        const int tail = t.vindex.at(er.tail), head = t.vindex.at(er.head);
        const int oriented_tail = fb[std::size_t(k)].sign > 0 ? tail : head;
        const int oriented_head = fb[std::size_t(k)].sign > 0 ? head : tail;
        const int v = end == 0 ? oriented_tail : oriented_head;
        index[key(int(fi), k, end)] = int(fs.flags.size());
        fs.flags.push_back({v, e, int(fi), -1, -1, -1});
      }
    }
  }

  for (std::size_t fi = 0; fi < p.faces.size(); ++fi) {
    const auto& fb = p.faces[fi].boundary;
    const int n = int(fb.size());
    for (int k = 0; k < n; ++k) {
      const int a = index.at(key(int(fi), k, 0));
      const int b = index.at(key(int(fi), k, 1));
      // s0: other endpoint of the same edge in the same face.
      fs.flags[std::size_t(a)].s0 = b;
      fs.flags[std::size_t(b)].s0 = a;
      // s1: same vertex and face, the neighboring boundary step.
      const int prev_head = index.at(key(int(fi), (k + n - 1) % n, 1));
      fs.flags[std::size_t(a)].s1 = prev_head;
      fs.flags[std::size_t(prev_head)].s1 = a;
      // s2: same vertex and edge in the other face of the edge.
      const int e = fs.flags[std::size_t(a)].e;
      const auto& ef = t.edge_faces[std::size_t(e)];
      const int other_face = fb[std::size_t(k)].sign > 0 ? ef[1].first : ef[0].first;
      // Locate the step of the other face using this edge.
      const auto& ob = p.faces[std::size_t(other_face)].boundary;
      for (int j = 0; j < int(ob.size()); ++j) {
        if (t.eindex.at(ob[std::size_t(j)].edge) != e) continue;
        // Opposite orientation: the tail there is our head and vice versa.
        const int oa = index.at(key(other_face, j, 0));
        const int oh = index.at(key(other_face, j, 1));
        fs.flags[std::size_t(a)].s2 = fs.flags[std::size_t(oa)].v == fs.flags[std::size_t(a)].v ? oa : oh;
        fs.flags[std::size_t(b)].s2 = fs.flags[std::size_t(oa)].v == fs.flags[std::size_t(b)].v ? oa : oh;
      }
    }
  }
  return fs;
}

// Attempts to extend root_a -> root_b to a full flag isomorphism.
std::optional<std::vector<int>> propagate(const FlagStructure& A, const FlagStructure& B,
                                          int root_a, int root_b) {
  std::vector<int> img(A.flags.size(), -1);
  std::vector<int> pre(B.flags.size(), -1);
  std::queue<int> q;
  img[std::size_t(root_a)] = root_b;
  pre[std::size_t(root_b)] = root_a;
  q.push(root_a);
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    const int b = img[std::size_t(a)];
    const int na[3] = {A.flags[std::size_t(a)].s0, A.flags[std::size_t(a)].s1, A.flags[std::size_t(a)].s2};
    const int nb[3] = {B.flags[std::size_t(b)].s0, B.flags[std::size_t(b)].s1, B.flags[std::size_t(b)].s2};
    for (int i = 0; i < 3; ++i) {
      if (img[std::size_t(na[i])] == -1 && pre[std::size_t(nb[i])] == -1) {
        img[std::size_t(na[i])] = nb[i];
        pre[std::size_t(nb[i])] = na[i];
        q.push(na[i]);
      } else if (img[std::size_t(na[i])] != nb[i]) {
        return std::nullopt;
      }
    }
  }
  for (int v : img)
    if (v == -1) return std::nullopt;  // disconnected flag graph
  return img;
}

}  // namespace

std::vector<PolyIsomorphism> all_isomorphisms(const AbstractPolyhedron& a,
                                              const AbstractPolyhedron& b,
                                              std::size_t limit) {
  std::vector<PolyIsomorphism> result;
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.faces.size() != b.faces.size())
    return result;

  const Topology ta = topology_of(a), tb = topology_of(b);
  const FlagStructure fa = build_flags(a, ta), fb = build_flags(b, tb);
  if (fa.flags.size() != fb.flags.size()) return result;

  for (int root_b = 0; root_b < int(fb.flags.size()); ++root_b) {
    auto img = propagate(fa, fb, 0, root_b);
    if (!img) continue;
    PolyIsomorphism iso;
    bool consistent = true;
    for (std::size_t fl = 0; fl < fa.flags.size() && consistent; ++fl) {
      const auto& x = fa.flags[fl];
      const auto& y = fb.flags[std::size_t((*img)[fl])];
      const CellId va = a.vertices[std::size_t(x.v)], vb = b.vertices[std::size_t(y.v)];
      const CellId ea = a.edges[std::size_t(x.e)].id, eb = b.edges[std::size_t(y.e)].id;
      const CellId faid = a.faces[std::size_t(x.f)].id, fbid = b.faces[std::size_t(y.f)].id;
      auto put = [&](std::map<CellId, CellId>& mp, CellId k, CellId v2) {
        auto [it, fresh] = mp.emplace(k, v2);
        if (!fresh && it->second != v2) consistent = false;
      };
      put(iso.vertex_map, va, vb);
      put(iso.edge_map, ea, eb);
      put(iso.face_map, faid, fbid);
    }
    if (consistent && iso.vertex_map.size() == a.vertices.size()) {
      result.push_back(std::move(iso));
      if (result.size() >= limit) break;
    }
  }
  return result;
}

bool isomorphic(const AbstractPolyhedron& a, const AbstractPolyhedron& b) {
  return !all_isomorphisms(a, b, 1).empty();
}

InscribabilityVerdict stellation_inscribable_necessary(const AbstractPolyhedron& p) {
  const std::size_t v = p.vertices.size(), f = p.faces.size();
  if (v <= f)
    return {false, "V(P) = " + std::to_string(v) + " <= F(P) = " + std::to_string(f) +
                       "; the stellation cannot be inscribed in the sphere"};
  return {true, "V(P) > F(P); not excluded by this criterion"};
}

}  // namespace hpolar
