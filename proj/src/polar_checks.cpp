#include "hpolar/polar_checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "hpolar/abstract_poly.hpp"

namespace hpolar {

namespace {

// Skeleton endpoints of a gluing: (start, end) as the cell_a side runs.
std::pair<int, int> gluing_ends(const ConeMetricSurface& q, std::size_t g) {
  const int c = q.gluings[g].cell_a, s = q.gluings[g].side_a;
  const int n = int(q.cells[std::size_t(c)].size());
  return {q.corner_vertex[std::size_t(c)][std::size_t(s)],
          q.corner_vertex[std::size_t(c)][std::size_t((s + 1) % n)]};
}

}  // namespace

AdmissibilityReport check_admissible(const ConeMetricSurface& q, int max_depth) {
  AdmissibilityReport rep;

  // 1: homeomorphic to S^2. Connectivity and matching are construction invariants;
  // re-verify the Euler characteristic.
  const int chi = q.euler_characteristic();
  rep.sphere_check = {"sphere-topology", chi == 2,
                      chi == 2 ? "" : "Euler characteristic " + std::to_string(chi)};

  // 2: piecewise spherical: every cell isometric to a polygon in the round sphere.
  rep.curvature_check = {"piecewise-spherical", true, ""};
  for (std::size_t c = 0; c < q.cells.size(); ++c) {
    const double res = forward_walk_residual(q.cells[c]);
    if (res > 1e-7) {
      rep.curvature_check.pass = false;
      rep.curvature_check.witness =
          "cell " + std::to_string(c) + " boundary walk residual " + std::to_string(res);
      break;
    }
  }

  // 3: all cone angles > 2pi.
  rep.cone_angle_check = {"cone-angles", true, ""};
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    const double a = q.vertices[v].cone_angle;
    if (a < 2.0 * M_PI - kGluingTol) {
      rep.cone_angle_check.pass = false;
      rep.cone_angle_check.witness =
          "vertex " + std::to_string(v) + " has cone angle " + std::to_string(a) + " < 2pi";
      break;
    }
  }

  // 4: depth-bounded certified search for closed geodesics of length <= 2pi.
  GeodesicSearchOptions opts;
  opts.max_depth = max_depth;
  rep.geodesic_check = search_short_geodesics(q, opts);
  return rep;
}

double longest_skeleton_edge(const ConeMetricSurface& q) {
  double e1 = 0.0;
  for (const auto& g : q.gluings) e1 = std::max(e1, q.side_length(g.cell_a, g.side_a));
  return e1;
}

Report check_ideally_admissible(const ConeMetricSurface& q) {
  Report rep;

  const int chi = q.euler_characteristic();
  rep.add("sphere-topology", chi == 2,
          chi == 2 ? "" : "Euler characteristic " + std::to_string(chi));

  // Cell complex combinatorially equivalent to a convex polyhedron: validate the
  // complex as an abstract polyhedron, Steinitz included.
  {
    const Report sub = validate(surface_complex(q));
    std::string why;
    for (const auto& cnd : sub.conditions)
      if (!cnd.pass) why += cnd.name + "; ";
    rep.add("polyhedral-combinatorics", sub.ok(), why);
  }

  // Every 2-cell a hemisphere: all interior angles pi, perimeter 2pi.
  {
    bool ok = true;
    std::string w;
    for (std::size_t c = 0; c < q.cells.size() && ok; ++c) {
      for (double a : q.cells[c].interior_angles)
        if (std::abs(a - M_PI) > kGluingTol) {
          ok = false;
          w = "cell " + std::to_string(c) + " has interior angle " + std::to_string(a);
        }
      if (ok && std::abs(q.cells[c].perimeter() - 2.0 * M_PI) > kGluingTol) {
        ok = false;
        w = "cell " + std::to_string(c) + " has perimeter " +
            std::to_string(q.cells[c].perimeter());
      }
    }
    rep.add("hemisphere-cells", ok, w);
  }

  // Gluing lengths strictly inside (0, pi).
  {
    bool ok = true;
    std::string w;
    for (std::size_t g = 0; g < q.gluings.size() && ok; ++g) {
      const double l = q.side_length(q.gluings[g].cell_a, q.gluings[g].side_a);
      if (l <= kStrictTol || l >= M_PI - kStrictTol) {
        ok = false;
        w = "gluing " + std::to_string(g) + " has length " + std::to_string(l);
      }
    }
    rep.add("gluing-lengths", ok, w);
  }

  // Simple 1-skeleton cycles not bounding a cell are longer than 2pi.
  {
    bool ok = true;
    std::string w;

    std::vector<std::vector<std::pair<int, int>>> incident(q.vertices.size());  // (gluing, other)
    std::vector<double> glen(q.gluings.size());
    for (std::size_t g = 0; g < q.gluings.size(); ++g) {
      const auto [a, b] = gluing_ends(q, g);
      incident[std::size_t(a)].emplace_back(int(g), b);
      incident[std::size_t(b)].emplace_back(int(g), a);
      glen[g] = q.side_length(q.gluings[g].cell_a, q.gluings[g].side_a);
    }
    std::set<std::vector<int>> cell_boundaries;
    for (std::size_t c = 0; c < q.cells.size(); ++c) {
      std::vector<int> bd;
      for (std::size_t s = 0; s < q.cells[c].size(); ++s)
        for (std::size_t g = 0; g < q.gluings.size(); ++g)
          if ((q.gluings[g].cell_a == int(c) && q.gluings[g].side_a == int(s)) ||
              (q.gluings[g].cell_b == int(c) && q.gluings[g].side_b == int(s)))
            bd.push_back(int(g));
      std::sort(bd.begin(), bd.end());
      cell_boundaries.insert(bd);
    }

    // DFS over simple cycles rooted at their minimal vertex, pruned at length 2pi.
    std::vector<int> path_vertices, path_gluings;
    std::vector<char> in_path(q.vertices.size(), 0);
    auto report_cycle = [&](double len) {
      std::vector<int> sorted = path_gluings;
      std::sort(sorted.begin(), sorted.end());
      if (cell_boundaries.count(sorted)) return;  // bounds a 2-cell
      ok = false;
      std::string ids;
      for (std::size_t i = 0; i < path_gluings.size(); ++i)
        ids += (i ? "," : "") + std::to_string(path_gluings[i]);
      w = "non-facial simple cycle of length " + std::to_string(len) + " via gluings [" +
          ids + "]";
    };
    std::function<void(int, int, double)> dfs = [&](int root, int cur, double len) {
      if (!ok) return;
      for (const auto& [g, other] : incident[std::size_t(cur)]) {
        if (!ok) return;
        if (!path_gluings.empty() && path_gluings.back() == g) continue;
        if (std::count(path_gluings.begin(), path_gluings.end(), g)) continue;
        const double nlen = len + glen[std::size_t(g)];
        if (nlen > 2.0 * M_PI + kGluingTol) continue;
        if (other == root && path_gluings.size() >= 1) {
          path_gluings.push_back(g);
          report_cycle(nlen);
          path_gluings.pop_back();
          continue;
        }
        if (other < root || in_path[std::size_t(other)]) continue;
        path_gluings.push_back(g);
        in_path[std::size_t(other)] = 1;
        dfs(root, other, nlen);
        in_path[std::size_t(other)] = 0;
        path_gluings.pop_back();
      }
    };
    for (int root = 0; root < int(q.vertices.size()) && ok; ++root) {
      in_path[std::size_t(root)] = 1;
      dfs(root, root, 0.0);
      in_path[std::size_t(root)] = 0;
    }
    rep.add("non-facial-cycles", ok, w);
  }

  return rep;
}

ConeMetricSurface t_expansion(const ConeMetricSurface& q, double t) {
  const Report ideal = check_ideally_admissible(q);
  if (!ideal.ok()) {
    std::string why;
    for (const auto& c : ideal.conditions)
      if (!c.pass) why += c.name + "; ";
    throw InvalidInput("t_expansion: surface is not ideally admissible: " + why);
  }
  const double e1 = longest_skeleton_edge(q);
  const double upper = M_PI / e1 - 1.0;
  if (!(t > 0.0 && t < upper - kStrictTol))
    throw InvalidInput("t_expansion: t must lie in the open interval (0, pi/e1 - 1)");

  // One triangle per (cell, side): base (1+t) * side, radial sides pi/2, base
  // angles pi/2, apex angle equal to the scaled base.
  std::vector<SphericalPolygon> cells;
  std::map<std::pair<int, int>, int> tri_of;  // (cell, side) -> triangle index
  for (std::size_t c = 0; c < q.cells.size(); ++c) {
    const int n = int(q.cells[c].size());
    for (int s = 0; s < n; ++s) {
      const double base = (1.0 + t) * q.cells[c].side_lengths[std::size_t(s)];
      tri_of[{int(c), s}] = int(cells.size());
      cells.push_back(SphericalPolygon({base, M_PI / 2.0, M_PI / 2.0},
                                       {M_PI / 2.0, M_PI / 2.0, base}));
    }
  }

  std::vector<Gluing> gluings;
  // Bases inherit the original gluings.
  for (const auto& g : q.gluings)
    gluings.push_back({tri_of.at({g.cell_a, g.side_a}), 0, tri_of.at({g.cell_b, g.side_b}), 0});
  // Radial sides pair consecutive triangles of the same fan: side 1 of triangle s
  // (base end to apex) against side 2 of triangle s+1 (apex to base start).
  for (std::size_t c = 0; c < q.cells.size(); ++c) {
    const int n = int(q.cells[c].size());
    for (int s = 0; s < n; ++s)
      gluings.push_back({tri_of.at({int(c), s}), 1, tri_of.at({int(c), (s + 1) % n}), 2});
  }

  return ConeMetricSurface(std::move(cells), std::move(gluings));
}

}  // namespace hpolar
