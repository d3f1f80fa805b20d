#include "hpolar/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace hpolar {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  return x < 0.0 ? x + kTwoPi : x;
}

double wrap_mod(double x, double m) {
  x = std::fmod(x, m);
  return x < 0.0 ? x + m : x;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Interval sets on the circle [0, 2pi): direction beams for arcs leaving a point.
struct ArcIntervals {
  std::vector<std::pair<double, double>> arcs;  // disjoint [lo, hi], split at zero

  static ArcIntervals arc(double lo, double hi) {
    ArcIntervals s;
    if (hi - lo >= kTwoPi) {
      s.arcs.emplace_back(0.0, kTwoPi);
      return s;
    }
    lo = wrap_2pi(lo);
    hi = lo + wrap_2pi(hi - lo);
    if (hi <= kTwoPi) {
      s.arcs.emplace_back(lo, hi);
    } else {
      s.arcs.emplace_back(lo, kTwoPi);
      s.arcs.emplace_back(0.0, hi - kTwoPi);
      std::sort(s.arcs.begin(), s.arcs.end());
    }
    return s;
  }

  bool empty() const { return arcs.empty(); }

  void intersect(const ArcIntervals& o) {
    std::vector<std::pair<double, double>> out;
    for (const auto& a : arcs)
      for (const auto& b : o.arcs) {
        const double lo = std::max(a.first, b.first), hi = std::min(a.second, b.second);
        if (hi > lo) out.emplace_back(lo, hi);
      }
    arcs = std::move(out);
  }

  bool contains(double phi, double tol) const {
    phi = wrap_2pi(phi);
    for (const auto& [lo, hi] : arcs)
      for (double shift : {0.0, kTwoPi, -kTwoPi})
        if (phi + shift >= lo - tol && phi + shift <= hi + tol) return true;
    return false;
  }

  std::vector<double> samples(int per_arc) const {
    std::vector<double> out;
    for (const auto& [lo, hi] : arcs)
      for (int i = 0; i < per_arc; ++i)
        out.push_back(lo + (hi - lo) * (i + 0.5) / per_arc);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Feasible cone of circle poles for the cone-point-free search: u . n >= 0 for all
// recorded constraint normals. The candidate extreme rays are maintained
// incrementally: adding facets can only keep old rays or create rays supported by
// a new facet, so the candidate set stays complete.
struct ConeBeam {
  std::vector<Eigen::Vector3d> normals;
  std::vector<Eigen::Vector3d> rays;  // feasible candidate rays (superset of extremes)
  bool primed = false;

  bool satisfies(const Eigen::Vector3d& u, double tol) const {
    for (const auto& n : normals)
      if (u.dot(n) < -tol) return false;
    return true;
  }

  const std::vector<Eigen::Vector3d>& candidates() const { return rays; }

  bool add(const Eigen::Vector3d& n1, const Eigen::Vector3d& n2, double tol) {
    const std::size_t old_count = normals.size();
    normals.push_back(n1.normalized());
    normals.push_back(n2.normalized());

    std::vector<Eigen::Vector3d> next;
    next.reserve(rays.size() + 2 * normals.size());
    for (const auto& r : rays)
      if (r.dot(normals[old_count]) >= -tol && r.dot(normals[old_count + 1]) >= -tol)
        next.push_back(r);

    auto try_candidate = [&](const Eigen::Vector3d& c) {
      if (satisfies(c, tol)) next.push_back(c);
    };
    auto cross_candidates = [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
      Eigen::Vector3d x = a.cross(b);
      const double n = x.norm();
      if (n < 1e-12) return;
      try_candidate(x / n);
      try_candidate(-x / n);
    };
    if (!primed) {
      // First facets: enumerate everything once.
      for (std::size_t i = 0; i < normals.size(); ++i) {
        try_candidate(normals[i]);
        for (std::size_t j = i + 1; j < normals.size(); ++j)
          cross_candidates(normals[i], normals[j]);
      }
      primed = true;
    } else {
      for (std::size_t k = old_count; k < normals.size(); ++k) {
        try_candidate(normals[k]);
        for (std::size_t i = 0; i < k; ++i) cross_candidates(normals[i], normals[k]);
      }
    }
    rays = std::move(next);
    return !rays.empty();
  }
};

// ---------------------------------------------------------------------------
// Spherical segment utilities.
bool within_arc(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& p,
                double tol = 1e-9) {
  return sphere_distance(a, p) + sphere_distance(p, b) <= sphere_distance(a, b) + tol;
}

double point_segment_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                              const Eigen::Vector3d& b) {
  double d = std::min(sphere_distance(p, a), sphere_distance(p, b));
  Eigen::Vector3d n = a.cross(b);
  const double nn = n.norm();
  if (nn < 1e-14) return d;
  n /= nn;
  Eigen::Vector3d f = p - p.dot(n) * n;
  const double fn = f.norm();
  if (fn > 1e-14) {
    f /= fn;
    if (within_arc(a, b, f)) d = std::min(d, std::asin(std::clamp(std::abs(p.dot(n)), 0.0, 1.0)));
  }
  return d;
}

double segment_segment_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                const Eigen::Vector3d& c, const Eigen::Vector3d& d) {
  Eigen::Vector3d n1 = a.cross(b), n2 = c.cross(d);
  if (n1.norm() > 1e-14 && n2.norm() > 1e-14) {
    Eigen::Vector3d x = n1.cross(n2);
    if (x.norm() > 1e-14) {
      x.normalize();
      if ((within_arc(a, b, x) && within_arc(c, d, x)) ||
          (within_arc(a, b, -x) && within_arc(c, d, -x)))
        return 0.0;
    }
  }
  return std::min(std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)),
                  std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)));
}

std::optional<Eigen::Vector3d> circle_segment_point(const Eigen::Vector3d& u,
                                                    const Eigen::Vector3d& a,
                                                    const Eigen::Vector3d& b, double tol) {
  Eigen::Vector3d n = a.cross(b);
  if (n.norm() < 1e-14) return std::nullopt;
  n.normalize();
  Eigen::Vector3d x = u.cross(n);
  if (x.norm() < 1e-12) return std::nullopt;
  x.normalize();
  if (within_arc(a, b, x, tol)) return x;
  if (within_arc(a, b, -x, tol)) return -x;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

struct Segment {
  int from = -1, to = -1;  // cone point indices
  double length = 0.0;
  double dep_angle = 0.0;  // direction at `from`, in its cone coordinate
  double arr_angle = 0.0;  // direction at `to` pointing back along the segment
  std::string desc;
};

// One-parameter family of segments between cone points whose developed endpoint is
// (anti)podal to the source: every departure in [lo, hi] yields a segment of the
// same length, with arrival angle K + slope * departure (slope -1 for antipodal
// endpoints, +1 for full circles back to the source).
struct FamilySegment {
  int from = -1, to = -1;
  double lo = 0.0, hi = 0.0;  // departure interval at `from`
  double K = 0.0;
  int slope = -1;             // arr = K + slope * dep
  double length = 0.0;
  std::string desc;
  double fwd_a = 1.0, fwd_b = 0.0;  // forward departure = fwd_a * dep + fwd_b
  std::vector<Eigen::Vector3d> crossed_a, crossed_b;  // directed crossed edges
  std::vector<int> crossed_va, crossed_vb;
  int cell = -1, w = -1;
  double base_raw = 0.0, corner_angle = 0.0;
  EmbeddedPolygon emb;
  bool reversed = false;
};

struct Engine {
  const ConeMetricSurface& q;
  GeodesicSearchOptions opts;
  int max_depth;
  std::uint64_t nodes = 0;
  bool budget_exceeded = false;
  bool sampled_family = false;
  std::optional<GeodesicSearchResult> refutation;

  std::vector<std::vector<double>> offsets;           // cumulative corner angles per vertex
  std::vector<std::map<int, double>> edge_angle;      // vertex -> (gluing -> angle)
  std::map<std::pair<int, int>, int> gluing_of_side;  // (cell, side) -> gluing
  std::vector<char> is_cone;

  std::vector<Segment> segments;
  std::set<std::tuple<int, int, long, long, long>> segment_keys;
  std::vector<FamilySegment> families;
  std::set<std::tuple<int, int, long, long, long, long>> family_keys;

  // Corner currently searched by the segment walk: angles inside the embedding are
  // 2pi-periodic, but departure angles live on the Theta-circle of the cone point;
  // exported values are lifted by the corner's raw offset.
  double a_base_raw_ = 0.0;
  double a_corner_angle_ = 0.0;

  double lift_departure(double phi) const {
    double x = wrap_2pi(phi - a_base_raw_);
    if (x > a_corner_angle_ + 1.0) x -= kTwoPi;  // tolerance spill below the corner start
    return a_base_raw_ + x;
  }

  Engine(const ConeMetricSurface& surface, const GeodesicSearchOptions& o)
      : q(surface), opts(o) {
    max_depth = opts.max_depth > 0 ? opts.max_depth : 3 * int(q.cells.size());
    for (std::size_t g = 0; g < q.gluings.size(); ++g) {
      gluing_of_side[{q.gluings[g].cell_a, q.gluings[g].side_a}] = int(g);
      gluing_of_side[{q.gluings[g].cell_b, q.gluings[g].side_b}] = int(g);
    }
    offsets.resize(q.vertices.size());
    edge_angle.resize(q.vertices.size());
    is_cone.assign(q.vertices.size(), 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      const auto& cv = q.vertices[v];
      double acc = 0.0;
      for (const auto& [c, k] : cv.corners) {
        offsets[v].push_back(acc);
        const int n = int(q.cells[std::size_t(c)].size());
        edge_angle[v][gluing_of_side.at({c, (k + n - 1) % n})] = acc;
        acc += q.cells[std::size_t(c)].interior_angles[std::size_t(k)];
      }
      is_cone[v] = std::abs(cv.cone_angle - kTwoPi) > 1e-9 ? 1 : 0;
    }
  }

  bool budget_ok() {
    if (++nodes > opts.node_budget) budget_exceeded = true;
    return !budget_exceeded;
  }

  void refute(double length, std::string description) {
    if (refutation) return;
    GeodesicSearchResult r;
    r.verdict = GeodesicVerdict::Refuted;
    r.depth = max_depth;
    r.witness_length = length;
    r.witness = std::move(description);
    refutation = r;
  }

  bool done() const { return refutation.has_value() || budget_exceeded; }

  // ----- embeddings ---------------------------------------------------------

  EmbeddedPolygon embed_anchored(int cell, int side, const Eigen::Vector3d& from,
                                 const Eigen::Vector3d& tangent) const {
    return embed_polygon_anchored(q.cells[std::size_t(cell)], side, from, tangent);
  }

  // Embeds the neighbor across side s of `cell`; the gluing reverses direction, so
  // the neighbor's side starts at the far endpoint and runs back along the arc.
  std::pair<std::pair<int, int>, EmbeddedPolygon> embed_across(
      int cell, int s, const EmbeddedPolygon& emb) const {
    const auto [c2, s2] = q.glue_of[std::size_t(cell)][std::size_t(s)];
    const int n = int(q.cells[std::size_t(cell)].size());
    const std::size_t far = std::size_t((s + 1) % n);
    return {{c2, s2}, embed_anchored(c2, s2, emb.verts[far], -emb.arrive[far])};
  }

  // ----- search C: 1-skeleton chains and smooth cycles -----------------------

  struct EdgeEnd {
    int vertex = -1;
    double angle = 0.0;
  };
  struct SkeletonEdge {
    EdgeEnd end[2];
    double length = 0.0;
  };
  std::vector<SkeletonEdge> skeleton;

  void build_skeleton() {
    skeleton.assign(q.gluings.size(), {});
    std::vector<int> filled(q.gluings.size(), 0);
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      for (const auto& [g, ang] : edge_angle[v]) {
        auto& e = skeleton[std::size_t(g)];
        e.end[filled[std::size_t(g)]++] = {int(v), ang};
      }
    for (std::size_t g = 0; g < q.gluings.size(); ++g) {
      skeleton[g].length = q.side_length(q.gluings[g].cell_a, q.gluings[g].side_a);
      if (filled[g] != 2)
        throw ConstructionError("geodesic search: inconsistent skeleton edge data");
    }
  }

  // The unique straight continuation of `g` arriving at smooth vertex `at`
  // (angle of g at that vertex = ang_in); -1 if none within tolerance.
  int straight_continuation(const EdgeEnd& at, double ang_in, EdgeEnd* far_end) const {
    const double theta = q.vertices[std::size_t(at.vertex)].cone_angle;
    for (const auto& [g2, ang2] : edge_angle[std::size_t(at.vertex)]) {
      if (std::abs(wrap_mod(ang2 - ang_in, theta) - M_PI) < 1e-7) {
        const auto& e2 = skeleton[std::size_t(g2)];
        const bool first = e2.end[0].vertex == at.vertex && std::abs(e2.end[0].angle - ang2) < 1e-12;
        *far_end = first ? e2.end[1] : e2.end[0];
        return int(g2);
      }
    }
    return -1;
  }

  void skeleton_search() {
    build_skeleton();
    const std::size_t step_cap = 4 * q.gluings.size() + 8;

    // Chains from cone points to cone points, straight at smooth vertices.
    for (std::size_t g0 = 0; g0 < skeleton.size() && !done(); ++g0) {
      for (int d0 = 0; d0 < 2; ++d0) {
        const EdgeEnd start = skeleton[g0].end[d0];
        if (!is_cone[std::size_t(start.vertex)]) continue;
        double len = skeleton[g0].length;
        EdgeEnd cur = skeleton[g0].end[1 - d0];
        std::vector<int> path{int(g0)};
        while (len <= opts.length_cutoff + opts.tol && path.size() <= step_cap) {
          if (is_cone[std::size_t(cur.vertex)]) {
            if (len >= 1e-6)
              add_segment({start.vertex, cur.vertex, len, start.angle, cur.angle,
                           "skeleton[" + join(path) + "]"});
            break;
          }
          EdgeEnd far;
          const int g2 = straight_continuation(cur, cur.angle, &far);
          if (g2 < 0) break;
          len += skeleton[std::size_t(g2)].length;
          cur = far;
          path.push_back(g2);
        }
      }
    }

    // Closed straight chains through smooth vertices only.
    for (std::size_t g0 = 0; g0 < skeleton.size() && !done(); ++g0) {
      for (int d0 = 0; d0 < 2 && !done(); ++d0) {
        const EdgeEnd start = skeleton[g0].end[d0];
        const EdgeEnd other = skeleton[g0].end[1 - d0];
        if (is_cone[std::size_t(start.vertex)] || is_cone[std::size_t(other.vertex)]) continue;
        double len = skeleton[g0].length;
        EdgeEnd cur = other;
        std::vector<int> path{int(g0)};
        while (len <= opts.length_cutoff + opts.tol && path.size() <= step_cap) {
          if (is_cone[std::size_t(cur.vertex)]) break;
          // Closure: back at the start vertex with the straight continuation
          // departing along g0 exactly as the walk began.
          if (cur.vertex == start.vertex) {
            const double theta = q.vertices[std::size_t(cur.vertex)].cone_angle;
            if (std::abs(wrap_mod(start.angle - cur.angle, theta) - M_PI) < 1e-7) {
              refute(len, "closed 1-skeleton geodesic through smooth vertices; gluings [" +
                              join(path) + "]");
              break;
            }
          }
          EdgeEnd far;
          const int g2 = straight_continuation(cur, cur.angle, &far);
          if (g2 < 0) break;
          len += skeleton[std::size_t(g2)].length;
          cur = far;
          path.push_back(g2);
        }
      }
    }
  }

  void add_segment(Segment s) {
    auto key = [](const Segment& x) {
      return std::make_tuple(x.from, x.to, lround(x.length * 1e8), lround(x.dep_angle * 1e8),
                             lround(x.arr_angle * 1e8));
    };
    if (segment_keys.insert(key(s)).second) segments.push_back(s);
    Segment r = s;
    std::swap(r.from, r.to);
    std::swap(r.dep_angle, r.arr_angle);
    r.desc += " (reversed)";
    if (segment_keys.insert(key(r)).second) segments.push_back(r);
  }

  // ----- search B: cone-point-free closed corridors ---------------------------

  struct CrossedEdge {
    Eigen::Vector3d a, b;
    int gluing = -1;
    int va = -1, vb = -1;  // complex vertices at the endpoints
  };

  int start_gluing_ = -1, start_cell_ = -1, start_side_ = -1;

  void corridor_search() {
    for (std::size_t g = 0; g < q.gluings.size() && !done(); ++g) {
      for (int dir = 0; dir < 2 && !done(); ++dir) {
        const int c0 = dir == 0 ? q.gluings[g].cell_a : q.gluings[g].cell_b;
        const int s0 = dir == 0 ? q.gluings[g].side_a : q.gluings[g].side_b;
        start_gluing_ = int(g);
        start_cell_ = c0;
        start_side_ = s0;
        const auto emb = embed_anchored(c0, s0, {1, 0, 0}, {0, 1, 0});
        const int n0 = int(q.cells[std::size_t(c0)].size());
        ConeBeam beam;
        if (!beam.add(emb.verts[std::size_t(s0)], -emb.verts[std::size_t((s0 + 1) % n0)],
                      opts.tol))
          continue;
        std::vector<CrossedEdge> crossed{
            {emb.verts[std::size_t(s0)], emb.verts[std::size_t((s0 + 1) % n0)], int(g)}};
        corridor_dfs(c0, s0, emb, beam, crossed, 1);
      }
    }
  }

  void corridor_dfs(int cell, int entry_side, const EmbeddedPolygon& emb,
                    const ConeBeam& beam, std::vector<CrossedEdge>& crossed, int depth) {
    if (done() || !budget_ok()) return;
    const int n = int(q.cells[std::size_t(cell)].size());
    for (int s = 0; s < n && !done(); ++s) {
      if (s == entry_side) continue;
      const int g2 = gluing_of_side.at({cell, s});
      if (g2 < start_gluing_) continue;  // canonical rooting at the minimal gluing

      const auto [nbr, emb2] = embed_across(cell, s, emb);
      const auto [c2, s2] = nbr;
      const int n2 = int(q.cells[std::size_t(c2)].size());
      const Eigen::Vector3d& A2 = emb2.verts[std::size_t(s2)];
      const Eigen::Vector3d& B2 = emb2.verts[std::size_t((s2 + 1) % n2)];

      if (g2 == start_gluing_ && c2 == start_cell_ && s2 == start_side_)
        try_closure(beam, crossed, emb2);
      if (done()) return;

      ConeBeam beam2 = beam;
      if (!beam2.add(A2, -B2, opts.tol)) continue;
      if (segment_segment_distance(crossed.front().a, crossed.front().b, A2, B2) >
          opts.length_cutoff + opts.tol)
        continue;
      if (depth + 1 > max_depth) continue;
      crossed.push_back({A2, B2, g2});
      corridor_dfs(c2, s2, emb2, beam2, crossed, depth + 1);
      crossed.pop_back();
    }
  }

  static Eigen::Matrix3d frame_of(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    Eigen::Matrix3d f;
    f.col(0) = a.normalized();
    f.col(1) = (b - b.dot(f.col(0)) * f.col(0)).normalized();
    f.col(2) = f.col(0).cross(f.col(1));
    return f;
  }

  static std::pair<Eigen::Vector3d, double> rotation_axis_angle(const Eigen::Matrix3d& r) {
    const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
    const double angle = std::acos(c);
    Eigen::Vector3d axis(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    if (axis.norm() > 1e-12) return {axis.normalized(), angle};
    Eigen::Matrix3d m = r + Eigen::Matrix3d::Identity();
    int col = 0;
    for (int i = 1; i < 3; ++i)
      if (m.col(i).norm() > m.col(col).norm()) col = i;
    return {m.col(col).normalized(), M_PI};
  }

  void try_closure(const ConeBeam& beam, const std::vector<CrossedEdge>& crossed,
                   const EmbeddedPolygon& emb2) {
    const Eigen::Vector3d A0 = crossed.front().a, B0 = crossed.front().b;
    const int n0 = int(q.cells[std::size_t(start_cell_)].size());
    const Eigen::Vector3d A1 = emb2.verts[std::size_t(start_side_)];
    const Eigen::Vector3d B1 = emb2.verts[std::size_t((start_side_ + 1) % n0)];
    const Eigen::Matrix3d h = frame_of(A1, B1) * frame_of(A0, B0).transpose();

    std::vector<std::pair<Eigen::Vector3d, double>> candidates;
    if ((h - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-8) {
      for (const auto& u : beam.candidates()) candidates.emplace_back(u, kTwoPi);
    } else {
      const auto [axis, angle] = rotation_axis_angle(h);
      candidates.emplace_back(axis, angle);
      candidates.emplace_back(-axis, kTwoPi - angle);
    }
    for (const auto& [u, length] : candidates) {
      if (length > opts.length_cutoff + opts.tol) continue;
      if (!beam.satisfies(u, opts.tol * 10.0)) continue;
      if (verify_corridor(u, length, crossed, A1, B1)) {
        std::vector<int> gl;
        for (const auto& ce : crossed) gl.push_back(ce.gluing);
        refute(length, "closed geodesic avoiding cone points; pole (" + fmt(u.x()) + "," +
                           fmt(u.y()) + "," + fmt(u.z()) + "); gluings [" + join(gl) + "]");
        return;
      }
    }
  }

  bool verify_corridor(const Eigen::Vector3d& u, double expected_length,
                       const std::vector<CrossedEdge>& crossed, const Eigen::Vector3d& final_a,
                       const Eigen::Vector3d& final_b) const {
    const auto x0 = circle_segment_point(u, crossed.front().a, crossed.front().b, opts.tol);
    if (!x0) return false;
    const Eigen::Vector3d t0 = u.cross(*x0);
    double s_prev = 0.0;
    for (std::size_t i = 1; i < crossed.size(); ++i) {
      const auto xi = circle_segment_point(u, crossed[i].a, crossed[i].b, opts.tol);
      if (!xi) return false;
      const double si = wrap_2pi(std::atan2(xi->dot(t0), xi->dot(*x0)));
      if (si <= s_prev + 1e-12) return false;
      s_prev = si;
    }
    const auto xf = circle_segment_point(u, final_a, final_b, opts.tol);
    if (!xf) return false;
    double sf = wrap_2pi(std::atan2(xf->dot(t0), xf->dot(*x0)));
    if (std::abs(expected_length - kTwoPi) < 1e-6 && sf < 1e-6) sf = kTwoPi;
    if (sf <= s_prev + 1e-12) return false;
    return std::abs(sf - expected_length) < 1e-6;
  }

  // ----- search A: segments between cone points through cell interiors --------

  static Eigen::Vector3d dir_at(double phi) { return {std::cos(phi), -std::sin(phi), 0.0}; }
  static Eigen::Vector3d pole_at(double phi) { return {std::sin(phi), std::cos(phi), 0.0}; }

  void segment_search() {
    for (std::size_t v = 0; v < q.vertices.size() && !done(); ++v) {
      if (!is_cone[v]) continue;
      const auto& cv = q.vertices[v];
      for (std::size_t m = 0; m < cv.corners.size() && !done(); ++m) {
        const auto [c, k] = cv.corners[m];
        const double corner_angle = q.cells[std::size_t(c)].interior_angles[std::size_t(k)];
        const double base = offsets[v][m];
        const Eigen::Vector3d p0(0, 0, 1);
        a_base_raw_ = base;
        a_corner_angle_ = corner_angle;
        const auto emb = embed_anchored(c, k, p0, dir_at(base + corner_angle));
        // Consistency of the clockwise angle convention with the cell orientation.
        {
          const Eigen::Vector3d dstart = -emb.arrive[std::size_t(k)];
          if ((dstart - dir_at(base)).norm() > 1e-6)
            throw ConstructionError("geodesic search: corner embedding convention violated");
        }
        ArcIntervals beam = ArcIntervals::arc(base, base + corner_angle);
        std::vector<CrossedEdge> crossed;
        segment_dfs(int(v), c, k, -1, emb, beam, crossed, 1);
      }
    }
  }

  void segment_dfs(int v0, int cell, int corner_k, int entry_side,
                   const EmbeddedPolygon& emb, const ArcIntervals& beam,
                   std::vector<CrossedEdge>& crossed, int depth) {
    if (done() || !budget_ok()) return;
    const int n = int(q.cells[std::size_t(cell)].size());
    const Eigen::Vector3d p0(0, 0, 1);

    for (int w = 0; w < n; ++w) {
      if (depth == 1 && w == corner_k) continue;
      const int tv = q.corner_vertex[std::size_t(cell)][std::size_t(w)];
      if (!is_cone[std::size_t(tv)]) continue;
      const Eigen::Vector3d& wpos = emb.verts[std::size_t(w)];
      if (crossed.empty() && (wpos - p0).norm() < 1e-9) continue;
      const double r = std::hypot(wpos.x(), wpos.y());
      if (r < 1e-7) {
        // (Anti)podal endpoint: a one-parameter family of arcs fits. For the
        // antipodal case every crossing happens at arc parameter below pi, so the
        // departures that truly cross an edge form the meridian interval of that
        // edge; intersecting them recovers the exact family (up to tolerance).
        ArcIntervals refined = beam;
        int state = 0;  // 0 ok, 1 drop (pole at a cone point), 2 unrepresentable
        for (const auto& ce : crossed) {
          const double ra = std::hypot(ce.a.x(), ce.a.y());
          const double rb = std::hypot(ce.b.x(), ce.b.y());
          if (ra < 1e-9 || rb < 1e-9) {
            // The whole family passes through the vertex sitting at the pole. If it
            // is a cone point the family splits there and its pieces are found
            // separately; only a smooth vertex leaves a gap in the enumeration.
            const int pole_vertex = ra < 1e-9 ? ce.va : ce.vb;
            state = is_cone[std::size_t(pole_vertex)] ? 1 : 2;
            break;
          }
          if (wpos.z() < 0.0) {
            const double pa = wrap_2pi(-std::atan2(ce.a.y(), ce.a.x()));
            const double pb = wrap_2pi(-std::atan2(ce.b.y(), ce.b.x()));
            const Eigen::Vector3d mid = (ce.a + ce.b).normalized();
            const double pm = wrap_2pi(-std::atan2(mid.y(), mid.x()));
            const double w_ab = wrap_2pi(pb - pa);
            ArcIntervals meridians = wrap_2pi(pm - pa) <= w_ab
                                         ? ArcIntervals::arc(pa - 1e-9, pa + w_ab + 1e-9)
                                         : ArcIntervals::arc(pb - 1e-9,
                                                             pb + wrap_2pi(pa - pb) + 1e-9);
            refined.intersect(meridians);
          }
        }
        if (state == 2) {
          sampled_family = true;
        } else if (state == 0) {
          for (const auto& [lo, hi] : refined.arcs) emit_family(v0, lo, hi, crossed, cell, w, emb);
        }
      } else {
        const double delta = std::atan2(wpos.y(), wpos.x());
        for (double phi : {wrap_2pi(-delta), wrap_2pi(M_PI - delta)}) {
          if (!beam.contains(phi, 1e-8)) continue;
          emit_segment(v0, phi, crossed, cell, w, emb);
          if (done()) return;
        }
      }
    }

    for (int s = 0; s < n && !done(); ++s) {
      if (s == entry_side) continue;
      if (depth == 1 && (s == corner_k || s == (corner_k + n - 1) % n)) continue;
      const auto [nbr, emb2] = embed_across(cell, s, emb);
      const auto [c2, s2] = nbr;
      const int n2 = int(q.cells[std::size_t(c2)].size());
      const Eigen::Vector3d& A2 = emb2.verts[std::size_t(s2)];
      const Eigen::Vector3d& B2 = emb2.verts[std::size_t((s2 + 1) % n2)];
      if (point_segment_distance(p0, A2, B2) > opts.length_cutoff + opts.tol) continue;
      ArcIntervals beam2 = beam;
      beam2.intersect(halfcircle_for(A2, +1));
      beam2.intersect(halfcircle_for(B2, -1));
      if (beam2.empty()) continue;
      if (depth + 1 > max_depth) continue;
      crossed.push_back({A2, B2, gluing_of_side.at({cell, s}),
                         q.corner_vertex[std::size_t(c2)][std::size_t(s2)],
                         q.corner_vertex[std::size_t(c2)][std::size_t((s2 + 1) % n2)]});
      segment_dfs(v0, c2, -1, s2, emb2, beam2, crossed, depth + 1);
      crossed.pop_back();
    }
  }

  // {phi : sign * pole(phi).P >= -tol}: pole(phi).P = r sin(phi + delta).
  ArcIntervals halfcircle_for(const Eigen::Vector3d& P, int sign) const {
    const double r = std::hypot(P.x(), P.y());
    if (r < 1e-12) return ArcIntervals::arc(0.0, kTwoPi);
    const double delta = std::atan2(P.y(), P.x());
    const double eps = std::asin(std::clamp(opts.tol / r, 0.0, 1.0)) + 1e-12;
    if (sign > 0) return ArcIntervals::arc(-delta - eps, -delta + M_PI + eps);
    return ArcIntervals::arc(-delta + M_PI - eps, -delta + kTwoPi + eps);
  }

  std::optional<Segment> make_segment(int v0, double phi,
                                      const std::vector<CrossedEdge>& crossed, int cell, int w,
                                      const EmbeddedPolygon& emb) {
    const Eigen::Vector3d p0(0, 0, 1);
    const Eigen::Vector3d t0 = dir_at(phi);
    const Eigen::Vector3d u = pole_at(phi);
    const Eigen::Vector3d& wpos = emb.verts[std::size_t(w)];

    double s_prev = 0.0;
    for (const auto& ce : crossed) {
      const auto xi = circle_segment_point(u, ce.a, ce.b, opts.tol);
      if (!xi) return std::nullopt;
      const double si = wrap_2pi(std::atan2(xi->dot(t0), xi->dot(p0)));
      if (si <= s_prev + 1e-12) return std::nullopt;
      s_prev = si;
    }
    double send = wrap_2pi(std::atan2(wpos.dot(t0), wpos.dot(p0)));
    // A return to the source point after a nontrivial corridor is a full circle.
    if (send < 1e-9) {
      if (crossed.empty()) return std::nullopt;
      send = kTwoPi;
    }
    if (send <= s_prev + 1e-9) return std::nullopt;
    if (send > opts.length_cutoff + opts.tol) return std::nullopt;

    const int tv = q.corner_vertex[std::size_t(cell)][std::size_t(w)];
    const auto& cv = q.vertices[std::size_t(tv)];
    int m = -1;
    for (std::size_t i = 0; i < cv.corners.size(); ++i)
      if (cv.corners[i].first == cell && cv.corners[i].second == w) m = int(i);
    if (m < 0) return std::nullopt;

    const Eigen::Vector3d dref = -emb.arrive[std::size_t(w)];
    const Eigen::Vector3d tback = (std::sin(send) * p0 - std::cos(send) * t0).normalized();
    const double ccw = std::atan2(dref.cross(tback).dot(wpos), dref.dot(tback));
    double cw = wrap_2pi(-ccw);
    const double corner_angle_w = q.cells[std::size_t(cell)].interior_angles[std::size_t(w)];
    if (cw > corner_angle_w + 1e-6) {
      if (cw < kTwoPi - 1e-6) return std::nullopt;  // arrives outside the corner
      cw = 0.0;
    }
    cw = std::min(cw, corner_angle_w);
    const double arr = offsets[std::size_t(tv)][std::size_t(m)] + cw;

    std::vector<int> gl;
    for (const auto& ce : crossed) gl.push_back(ce.gluing);
    return Segment{v0, tv, send, lift_departure(phi), arr,
                   "interior segment via gluings [" + join(gl) + "]"};
  }

  void emit_segment(int v0, double phi, const std::vector<CrossedEdge>& crossed, int cell, int w,
                    const EmbeddedPolygon& emb) {
    if (auto s = make_segment(v0, phi, crossed, cell, w, emb)) add_segment(*s);
  }

  // Records a one-parameter family on the beam arc [lo, hi]; probes three interior
  // departures and requires the affine relation arr = K - dep to hold.
  void emit_family(int v0, double lo, double hi, const std::vector<CrossedEdge>& crossed,
                   int cell, int w, const EmbeddedPolygon& emb) {
    // Slivers below the accumulated constraint slack are tolerance artifacts of
    // corridors that merely graze the configuration; real families are open.
    const double width = hi - lo;
    if (width < 1e-6) return;
    std::vector<Segment> probes;
    for (double f : {0.25, 0.5, 0.75}) {
      if (auto s = make_segment(v0, wrap_2pi(lo + f * width), crossed, cell, w, emb))
        probes.push_back(*s);
    }
    if (probes.size() < 2) {
      sampled_family = true;  // could not represent the family exactly
      for (const auto& s : probes) add_segment(s);
      return;
    }
    const double raw_slope = (probes.back().arr_angle - probes.front().arr_angle) /
                             (probes.back().dep_angle - probes.front().dep_angle);
    const int slope = raw_slope > 0.0 ? +1 : -1;
    const double K = probes.front().arr_angle - slope * probes.front().dep_angle;
    const double lift_lo = lift_departure(lo);
    const double lift_hi = lift_lo + (hi - lo);
    bool affine = std::abs(raw_slope - slope) < 1e-5;
    for (const auto& s : probes)
      if (std::abs(s.arr_angle - slope * s.dep_angle - K) > 1e-6 ||
          std::abs(s.length - probes.front().length) > 1e-9)
        affine = false;
    if (!affine) {
      sampled_family = true;
      for (const auto& t : probes) add_segment(t);
      return;
    }
    FamilySegment fam;
    fam.from = v0;
    fam.to = probes.front().to;
    fam.lo = lift_lo;
    fam.hi = lift_hi;
    fam.K = K;
    fam.slope = slope;
    fam.length = probes.front().length;
    fam.desc = probes.front().desc + " (family)";
    for (const auto& ce : crossed) {
      fam.crossed_a.push_back(ce.a);
      fam.crossed_b.push_back(ce.b);
      fam.crossed_va.push_back(ce.va);
      fam.crossed_vb.push_back(ce.vb);
    }
    fam.cell = cell;
    fam.w = w;
    fam.base_raw = a_base_raw_;
    fam.corner_angle = a_corner_angle_;
    fam.emb = emb;
    add_family(fam);
  }

  void add_family(const FamilySegment& f) {
    auto key = [](const FamilySegment& x) {
      return std::make_tuple(x.from, x.to, lround(x.lo * 1e7), lround(x.hi * 1e7),
                             lround(x.K * 1e7), lround(x.length * 1e7));
    };
    if (family_keys.insert(key(f)).second) families.push_back(f);
    // Reversal keeps the slope; departures become the original arrivals.
    FamilySegment r = f;
    r.from = f.to;
    r.to = f.from;
    r.lo = f.slope < 0 ? f.K - f.hi : f.K + f.lo;
    r.hi = f.slope < 0 ? f.K - f.lo : f.K + f.hi;
    r.K = -f.slope * f.K;
    r.fwd_a = f.slope;
    r.fwd_b = -f.slope * f.K;
    r.desc = f.desc + " (reversed)";
    r.reversed = !f.reversed;
    if (family_keys.insert(key(r)).second) families.push_back(r);
  }

  // Concrete member of a family at forward departure phi (reversed families are
  // queried by their arrival value, which is the forward departure).
  std::optional<Segment> family_member(const FamilySegment& f, double dep) {
    const double forward_dep = f.fwd_a * dep + f.fwd_b;
    std::vector<CrossedEdge> crossed;
    for (std::size_t i = 0; i < f.crossed_a.size(); ++i)
      crossed.push_back({f.crossed_a[i], f.crossed_b[i], -1, f.crossed_va[i], f.crossed_vb[i]});
    a_base_raw_ = f.base_raw;
    a_corner_angle_ = f.corner_angle;
    auto seg = make_segment(f.reversed ? f.to : f.from, wrap_2pi(forward_dep), crossed, f.cell,
                            f.w, f.emb);
    if (!seg) return std::nullopt;
    if (f.reversed) {
      std::swap(seg->from, seg->to);
      std::swap(seg->dep_angle, seg->arr_angle);
    }
    // Keep the caller's unwrapped parameter so downstream gap checks stay exact.
    seg->dep_angle = dep;
    seg->arr_angle = f.K + f.slope * dep;
    return seg;
  }

  // ----- assembling closed geodesics through cone points ----------------------

  bool gaps_ok(int v, double ang_in, double ang_out) const {
    const double theta = q.vertices[std::size_t(v)].cone_angle;
    const double g1 = wrap_mod(ang_out - ang_in, theta);
    const double g2 = theta - g1;
    return g1 >= M_PI - 1e-7 && g2 >= M_PI - 1e-7;
  }

  void assemble_cycles() {
    if (segments.empty()) return;
    std::vector<std::vector<int>> by_from(q.vertices.size());
    double min_len = 1e30;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      by_from[std::size_t(segments[i].from)].push_back(int(i));
      min_len = std::min(min_len, segments[i].length);
    }
    const int step_cap = int(opts.length_cutoff / std::max(min_len, 1e-6)) + 2;

    std::vector<int> chain;
    for (std::size_t i = 0; i < segments.size() && !done(); ++i) {
      chain.assign(1, int(i));
      assemble_dfs(by_from, int(i), segments[i].to, segments[i].arr_angle,
                   segments[i].length, chain, step_cap);
    }
  }

  // Intervals of x in [lo, hi] with (x - off) mod theta in [pi - slack, theta - pi + slack].
  static std::vector<std::pair<double, double>> modular_window(double lo, double hi, double off,
                                                               double theta, double slack) {
    std::vector<std::pair<double, double>> out;
    const double wlo = off + M_PI - slack, whi = off + theta - M_PI + slack;
    const int m0 = int(std::floor((lo - whi) / theta)) - 1;
    const int m1 = int(std::ceil((hi - wlo) / theta)) + 1;
    for (int m = m0; m <= m1; ++m) {
      const double a = std::max(lo, wlo + m * theta), b = std::min(hi, whi + m * theta);
      if (b >= a) out.emplace_back(a, b);
    }
    return out;
  }

  void refute_chain(const std::vector<Segment>& segs) {
    double total = 0.0;
    std::string d = "closed geodesic through cone points; segments: ";
    for (std::size_t j = 0; j < segs.size(); ++j) {
      total += segs[j].length;
      d += (j ? " + " : "") + std::to_string(segs[j].from) + "->" + std::to_string(segs[j].to) +
           " (len " + fmt(segs[j].length) + ", " + segs[j].desc + ")";
    }
    refute(total, d);
  }

  void family_cycles() {
    const double slack = 1e-9;

    // Single-family loops: dep - arr = (1 - slope) dep - K must land in the
    // admissible gap window at the cone point.
    for (const auto& f : families) {
      if (done()) return;
      if (f.from != f.to || f.length > opts.length_cutoff + opts.tol) continue;
      const double theta = q.vertices[std::size_t(f.from)].cone_angle;
      std::vector<std::pair<double, double>> windows;
      if (f.slope < 0) {
        windows = modular_window(2.0 * f.lo, 2.0 * f.hi, f.K, theta, slack);
        for (auto& [a, b] : windows) {
          a *= 0.5;
          b *= 0.5;
        }
      } else {
        // dep - arr = -K, independent of the parameter.
        if (std::abs(wrap_mod(-f.K, theta) - M_PI) <= theta / 2.0 - M_PI + slack)
          windows.emplace_back(f.lo, f.hi);
      }
      for (auto [a, b] : windows) {
        bool verified = false;
        for (double t : {0.5, 0.25, 0.75}) {
          const double dep = std::clamp(a + (b - a) * t, f.lo, f.hi);
          auto seg = family_member(f, dep);
          if (!seg) continue;
          if (!gaps_ok(f.from, seg->arr_angle, seg->dep_angle)) continue;
          refute_chain({*seg});
          verified = true;
          break;
        }
        if (!verified && !done()) sampled_family = true;
        if (done()) return;
      }
    }

    // Two-family cycles. The gap conditions at the two cone points constrain
    // u = dep_g - slope_f * dep_f and v = dep_f - slope_g * dep_g; when the slope
    // product is +1 these are (anti)aligned one-dimensional constraints, otherwise
    // they are independent and a box check resolves the pair.
    for (std::size_t i = 0; i < families.size() && !done(); ++i) {
      for (std::size_t j = 0; j < families.size() && !done(); ++j) {
        const auto& f = families[i];
        const auto& g = families[j];
        if (f.to != g.from || g.to != f.from) continue;
        if (f.length + g.length > opts.length_cutoff + opts.tol) continue;
        const double thw = q.vertices[std::size_t(f.to)].cone_angle;
        const double thv = q.vertices[std::size_t(f.from)].cone_angle;

        auto probe_pair = [&](double depf, double depg) {
          auto s1 = family_member(f, depf);
          auto s2 = family_member(g, depg);
          if (!s1 || !s2) return false;
          if (!gaps_ok(f.to, s1->arr_angle, s2->dep_angle)) return false;
          if (!gaps_ok(f.from, s2->arr_angle, s1->dep_angle)) return false;
          refute_chain({*s1, *s2});
          return true;
        };

        if (f.slope == -1 && g.slope == -1) {
          for (auto [a1, b1] : modular_window(f.lo + g.lo, f.hi + g.hi, f.K, thw, slack)) {
            for (auto [a, b] : modular_window(a1, b1, g.K, thv, slack)) {
              bool verified = false;
              for (double t : {0.5, 0.25, 0.75}) {
                const double sigma = a + (b - a) * t;
                const double flo = std::max(f.lo, sigma - g.hi);
                const double fhi = std::min(f.hi, sigma - g.lo);
                if (fhi < flo) continue;
                const double depf = 0.5 * (flo + fhi);
                if (probe_pair(depf, sigma - depf)) {
                  verified = true;
                  break;
                }
              }
              if (!verified && !done()) sampled_family = true;
              if (done()) return;
            }
          }
        } else if (f.slope == +1 && g.slope == +1) {
          // u = dep_g - dep_f; constraints: (u - K_f) and (-u - K_g) in the window.
          for (auto [a1, b1] :
               modular_window(g.lo - f.hi, g.hi - f.lo, f.K, thw, slack)) {
            for (auto [a, b] : modular_window(-b1, -a1, g.K, thv, slack)) {
              bool verified = false;
              for (double t : {0.5, 0.25, 0.75}) {
                const double u = -(a + (b - a) * t);
                const double flo = std::max(f.lo, g.lo - u);
                const double fhi = std::min(f.hi, g.hi - u);
                if (fhi < flo) continue;
                const double depf = 0.5 * (flo + fhi);
                if (probe_pair(depf, depf + u)) {
                  verified = true;
                  break;
                }
              }
              if (!verified && !done()) sampled_family = true;
              if (done()) return;
            }
          }
        } else {
          // Mixed slopes: the two constraints are independent; intersect each with
          // its variable range and check the induced box.
          const int sf = f.slope, sg = g.slope;
          const double ulo = std::min(g.lo - sf * f.lo, g.lo - sf * f.hi);
          const double uhi = std::max(g.hi - sf * f.lo, g.hi - sf * f.hi);
          const double vlo = std::min(f.lo - sg * g.lo, f.lo - sg * g.hi);
          const double vhi = std::max(f.hi - sg * g.lo, f.hi - sg * g.hi);
          for (auto [ua, ub] : modular_window(ulo, uhi, f.K, thw, slack)) {
            for (auto [va, vb] : modular_window(vlo, vhi, g.K, thv, slack)) {
              bool verified = false;
              for (double tu : {0.5, 0.25, 0.75}) {
                for (double tv2 : {0.5, 0.25, 0.75}) {
                  const double u = ua + (ub - ua) * tu;
                  const double v = va + (vb - va) * tv2;
                  // dep_g = u + sf*dep_f, dep_f = v + sg*dep_g:
                  // dep_f = v + sg*u + sg*sf*dep_f => (1 - sg*sf) dep_f = v + sg*u.
                  const double denom = 1.0 - double(sg * sf);
                  if (std::abs(denom) < 0.5) continue;
                  const double depf = (v + sg * u) / denom;
                  const double depg = u + sf * depf;
                  if (depf < f.lo - 1e-9 || depf > f.hi + 1e-9) continue;
                  if (depg < g.lo - 1e-9 || depg > g.hi + 1e-9) continue;
                  if (probe_pair(depf, depg)) {
                    verified = true;
                    break;
                  }
                }
                if (verified || done()) break;
              }
              if (!verified && !done()) sampled_family = true;
              if (done()) return;
            }
          }
        }
      }
    }

    // One family plus a chain of ordinary segments.
    std::vector<std::vector<int>> by_from(q.vertices.size());
    for (std::size_t i = 0; i < segments.size(); ++i)
      by_from[std::size_t(segments[i].from)].push_back(int(i));

    for (const auto& f : families) {
      if (done()) return;
      const double budget = opts.length_cutoff + opts.tol - f.length;
      if (budget < 1e-6) continue;
      const double thw = q.vertices[std::size_t(f.to)].cone_angle;
      const double thv = q.vertices[std::size_t(f.from)].cone_angle;

      std::vector<int> chain;
      std::function<void(int, double, double)> walk = [&](int cur, double arr, double total) {
        if (done() || !budget_ok()) return;
        if (cur == f.from && !chain.empty()) {
          // Intersect the two departure windows for the family parameter.
          const Segment& first = segments[std::size_t(chain.front())];
          const Segment& last = segments[std::size_t(chain.back())];
          const double off_w =
              f.slope < 0 ? f.K - first.dep_angle : first.dep_angle - f.K;
          for (auto [a1, b1] : modular_window(f.lo, f.hi, off_w, thw, slack)) {
            for (auto [a, b] : modular_window(a1, b1, last.arr_angle, thv, slack)) {
              bool verified = false;
              for (double t : {0.5, 0.25, 0.75}) {
                const double dep = a + (b - a) * t;
                auto seg = family_member(f, dep);
                if (!seg) continue;
                if (!gaps_ok(f.to, seg->arr_angle, first.dep_angle)) continue;
                if (!gaps_ok(f.from, last.arr_angle, seg->dep_angle)) continue;
                std::vector<Segment> full{*seg};
                for (int idx : chain) full.push_back(segments[std::size_t(idx)]);
                refute_chain(full);
                verified = true;
                break;
              }
              if (!verified && !done()) sampled_family = true;
              if (done()) return;
            }
          }
        }
        for (int idx : by_from[std::size_t(cur)]) {
          if (done()) return;
          const Segment& s = segments[std::size_t(idx)];
          if (total + s.length > budget) continue;
          if (!chain.empty() &&
              !gaps_ok(cur, segments[std::size_t(chain.back())].arr_angle, s.dep_angle))
            continue;
          chain.push_back(idx);
          walk(s.to, s.arr_angle, total + s.length);
          chain.pop_back();
        }
      };
      walk(f.to, 0.0, 0.0);
    }
  }

  void assemble_dfs(const std::vector<std::vector<int>>& by_from, int first, int cur,
                    double arr, double total, std::vector<int>& chain, int step_cap) {
    if (done() || !budget_ok()) return;
    if (total > opts.length_cutoff + opts.tol) return;
    const Segment& s0 = segments[std::size_t(first)];
    if (cur == s0.from && gaps_ok(cur, arr, s0.dep_angle)) {
      std::string d = "closed geodesic through cone points; segments: ";
      for (std::size_t j = 0; j < chain.size(); ++j) {
        const Segment& sj = segments[std::size_t(chain[j])];
        d += (j ? " + " : "") + std::to_string(sj.from) + "->" + std::to_string(sj.to) +
             " (len " + fmt(sj.length) + ", " + sj.desc + ")";
      }
      refute(total, d);
      return;
    }
    if (int(chain.size()) >= step_cap) return;
    for (int idx : by_from[std::size_t(cur)]) {
      const Segment& s = segments[std::size_t(idx)];
      if (!gaps_ok(cur, arr, s.dep_angle)) continue;
      chain.push_back(idx);
      assemble_dfs(by_from, first, s.to, s.arr_angle, total + s.length, chain, step_cap);
      chain.pop_back();
      if (done()) return;
    }
  }
};

}  // namespace

GeodesicSearchResult search_short_geodesics(const ConeMetricSurface& q,
                                            const GeodesicSearchOptions& opts) {
  Engine eng(q, opts);
  try {
    const bool timing = std::getenv("HPOLAR_TIMING") != nullptr;
    auto stamp = [&](const char* what) {
      static auto last = std::chrono::steady_clock::now();
      if (!timing) return;
      const auto now = std::chrono::steady_clock::now();
      fprintf(stderr, "phase %s: %.2fs nodes=%llu segs=%zu fams=%zu\n", what,
              std::chrono::duration<double>(now - last).count(),
              (unsigned long long)eng.nodes, eng.segments.size(), eng.families.size());
      last = now;
    };
    stamp("start");
    eng.skeleton_search();
    stamp("skeleton");
    if (!eng.done()) eng.corridor_search();
    stamp("corridor");
    if (!eng.done()) eng.segment_search();
    stamp("segments");
    if (!eng.refutation && !eng.budget_exceeded) eng.assemble_cycles();
    stamp("assembly");
    if (!eng.refutation && !eng.budget_exceeded) eng.family_cycles();
    stamp("families");
  } catch (const std::exception& e) {
    if (!eng.refutation) {
      GeodesicSearchResult res;
      res.verdict = GeodesicVerdict::Inconclusive;
      res.depth = eng.max_depth;
      res.note = std::string("search aborted: ") + e.what();
      return res;
    }
  }

  if (eng.refutation) return *eng.refutation;

  GeodesicSearchResult res;
  res.depth = eng.max_depth;
  if (eng.budget_exceeded) {
    res.verdict = GeodesicVerdict::Inconclusive;
    res.note = "node budget exhausted after " + std::to_string(eng.nodes) + " nodes";
  } else if (eng.sampled_family) {
    res.verdict = GeodesicVerdict::Inconclusive;
    res.note = "antipodal segment family required sampling; certification withheld";
  } else {
    res.verdict = GeodesicVerdict::Certified;
  }
  return res;
}

}  // namespace hpolar
