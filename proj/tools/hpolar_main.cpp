// Command-line front end: batch checks and constructions over JSON files.

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "hpolar/catalog.hpp"
#include "hpolar/json_io.hpp"
#include "hpolar/polar_checks.hpp"
#include "hpolar/pogorelov.hpp"

using namespace hpolar;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << text;
}

// Reports share a fixed shape; keys are emitted in sorted order, so repeated runs
// with identical inputs produce identical bytes.
int emit_report(const std::string& report_path, const std::string& verdict,
                const Report& conditions, const json& options, const json& metrics,
                int exit_code) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["verdict"] = verdict;
  j["conditions"] = to_json(conditions);
  j["options"] = options;
  if (!metrics.is_null()) j["metrics"] = metrics;
  const std::string text = j.dump(2) + "\n";
  if (report_path.empty())
    std::cout << text;
  else
    write_text(report_path, text);
  return exit_code;
}

json polyhedron_metrics(const ConvexPolyhedronH3& p) {
  json m;
  m["vertices"] = json::array();
  for (std::size_t v = 0; v < p.combinatorics.vertices.size(); ++v) {
    const char* cls = p.vertex_class[v] == VertexClass::Finite    ? "finite"
                      : p.vertex_class[v] == VertexClass::Ideal   ? "ideal"
                                                                  : "hyperinfinite";
    m["vertices"].push_back({{"id", p.combinatorics.vertices[v]},
                             {"class", cls},
                             {"klein", {p.vertex_coords[v].x(), p.vertex_coords[v].y(),
                                        p.vertex_coords[v].z()}}});
  }
  m["edges"] = json::array();
  for (const auto& e : p.combinatorics.edges) {
    json je = {{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
    const EdgeLength l = edge_length(p, e.id);
    if (l.kind == LengthKind::Finite)
      je["length"] = l.value;
    else
      je["length"] = l.kind == LengthKind::Infinite ? "infinite" : "undefined";
    try {
      je["dihedral"] = dihedral_angle(p, e.id);
    } catch (const std::exception&) {
      je["dihedral"] = "undefined";
    }
    m["edges"].push_back(je);
  }
  m["faces"] = json::array();
  for (const auto& f : p.combinatorics.faces) {
    json jf = {{"id", f.id}};
    try {
      jf["area"] = face_area(p, f.id);
    } catch (const std::exception&) {
      jf["area"] = "non-compact";
    }
    m["faces"].push_back(jf);
  }
  if (!p.notes.empty()) m["notes"] = p.notes;
  return m;
}

std::string geodesic_verdict_name(GeodesicVerdict v) {
  switch (v) {
    case GeodesicVerdict::Certified:
      return "certified";
    case GeodesicVerdict::Refuted:
      return "refuted";
    default:
      return "inconclusive";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex polyhedra in hyperbolic 3-space and their polar cone metrics"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string in1, in2, out1, out2, report;
  int depth = 0;
  double t_value = 0.0, tol = 1e-9;
  double pa = 0.1, pb = 0.1, pc = 0.1, pu = 0.0, pv = 0.05;

  auto add_report = [&](CLI::App* cmd) {
    cmd->add_option("--report", report, "write the JSON report here instead of stdout");
  };

  {
    auto* c = app.add_subcommand("validate", "check the chain-complex invariants");
    c->add_option("polyhedron", in1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const AbstractPolyhedron p = polyhedron_from_json(read_json(in1));
        const Report rep = validate(p);
        return emit_report(report, rep.ok() ? "valid" : "invalid", rep,
                           {{"polyhedron", in1}}, {}, rep.ok() ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("dual", "write the Poincare dual polyhedron");
    c->add_option("polyhedron", in1)->required();
    c->add_option("output", out1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const AbstractPolyhedron d = poincare_dual(polyhedron_from_json(read_json(in1)));
        write_text(out1, to_json(d).dump(2) + "\n");
        Report rep;
        rep.add("dual-valid", validate(d).ok());
        return emit_report(report, "ok", rep, {{"polyhedron", in1}, {"output", out1}},
                           {{"vertices", d.vertices.size()},
                            {"edges", d.edges.size()},
                            {"faces", d.faces.size()}},
                           0);
      };
    });
  }
  {
    auto* c = app.add_subcommand("steinitz", "test the 1-skeleton for planarity and "
                                             "3-connectivity");
    c->add_option("polyhedron", in1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const SimpleGraph g = one_skeleton(polyhedron_from_json(read_json(in1)));
        Report rep;
        rep.add("planar", is_planar(g));
        rep.add("three-connected", is_three_connected(g));
        rep.add("steinitz", is_steinitz(g));
        return emit_report(report, rep.ok() ? "polyhedral" : "not-polyhedral", rep,
                           {{"polyhedron", in1}}, {}, rep.ok() ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("stellate", "replace every face by a fan over a new apex");
    c->add_option("polyhedron", in1)->required();
    c->add_option("output", out1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const AbstractPolyhedron s = stellate(polyhedron_from_json(read_json(in1)));
        write_text(out1, to_json(s).dump(2) + "\n");
        Report rep;
        rep.add("stellation-valid", validate(s).ok());
        return emit_report(report, "ok", rep, {{"polyhedron", in1}, {"output", out1}},
                           {{"vertices", s.vertices.size()},
                            {"edges", s.edges.size()},
                            {"faces", s.faces.size()}},
                           0);
      };
    });
  }
  {
    auto* c = app.add_subcommand("inscribable-stellation",
                                 "necessary inscribability test for the stellation");
    c->add_option("polyhedron", in1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const auto v = stellation_inscribable_necessary(polyhedron_from_json(read_json(in1)));
        Report rep;
        rep.add("not-excluded", v.not_excluded, v.reason);
        return emit_report(report, v.not_excluded ? "not-excluded" : "excluded", rep,
                           {{"polyhedron", in1}}, {}, v.not_excluded ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("build-h3", "intersect half-spaces into a polyhedron");
    c->add_option("halfspaces", in1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const auto p = build_from_halfspaces(halfspaces_from_json(read_json(in1)));
        Report rep;
        rep.add("built", true);
        return emit_report(report, "ok", rep, {{"halfspaces", in1}}, polyhedron_metrics(p), 0);
      };
    });
  }
  {
    auto* c = app.add_subcommand("gauss-image", "polar cone metric of a polyhedron");
    c->add_option("halfspaces", in1)->required();
    c->add_option("output", out1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const auto p = build_from_halfspaces(halfspaces_from_json(read_json(in1)));
        const auto q = gauss_image(p);
        write_text(out1, to_json(q).dump(2) + "\n");
        json metrics;
        metrics["cone_points"] = json::array();
        for (std::size_t v = 0; v < q.vertices.size(); ++v)
          metrics["cone_points"].push_back({{"index", v},
                                            {"face", q.vertices[v].label},
                                            {"angle", q.vertices[v].cone_angle}});
        Report rep;
        rep.add("built", true);
        return emit_report(report, "ok", rep, {{"halfspaces", in1}, {"output", out1}},
                           metrics, 0);
      };
    });
  }
  {
    auto* c = app.add_subcommand("check-admissible",
                                 "Rivin admissibility with a certified geodesic search");
    c->add_option("cone-metric", in1)->required();
    c->add_option("--depth", depth, "cells crossed by the search (0: three per cell)");
    add_report(c);
    c->callback([&] {
      run = [&] {
        const auto q = cone_metric_from_json(read_json(in1));
        const AdmissibilityReport rep = check_admissible(q, depth);
        Report conditions;
        conditions.conditions = {rep.sphere_check, rep.curvature_check, rep.cone_angle_check};
        conditions.add("geodesics-longer-than-2pi",
                       rep.geodesic_check.verdict == GeodesicVerdict::Certified,
                       rep.geodesic_check.verdict == GeodesicVerdict::Refuted
                           ? rep.geodesic_check.witness
                           : rep.geodesic_check.note);
        json metrics = {{"geodesic_verdict", geodesic_verdict_name(rep.geodesic_check.verdict)},
                        {"search_depth", rep.geodesic_check.depth}};
        if (rep.geodesic_check.verdict == GeodesicVerdict::Refuted)
          metrics["witness_length"] = rep.geodesic_check.witness_length;
        const std::string verdict = rep.admissible_certified() ? "admissible-certified"
                                    : rep.refuted()            ? "refuted"
                                                               : "inconclusive";
        return emit_report(report, verdict, conditions,
                           {{"cone-metric", in1}, {"depth", depth}}, metrics,
                           rep.admissible_certified() ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("check-ideal", "ideal admissibility of a cone metric");
    c->add_option("cone-metric", in1)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const Report rep = check_ideally_admissible(cone_metric_from_json(read_json(in1)));
        return emit_report(report, rep.ok() ? "ideally-admissible" : "not-ideally-admissible",
                           rep, {{"cone-metric", in1}}, {}, rep.ok() ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("t-expand", "t-expansion of an ideally admissible metric");
    c->add_option("cone-metric", in1)->required();
    c->add_option("output", out1)->required();
    c->add_option("--t", t_value, "expansion parameter in (0, pi/e1 - 1)")->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const auto q = cone_metric_from_json(read_json(in1));
        const auto qt = t_expansion(q, t_value);
        write_text(out1, to_json(qt).dump(2) + "\n");
        double special_max = 0.0;
        for (double a : cone_angles(qt)) special_max = std::max(special_max, a);
        Report rep;
        rep.add("expanded", true);
        return emit_report(report, "ok", rep,
                           {{"cone-metric", in1}, {"output", out1}, {"t", t_value}},
                           {{"cells", qt.cells.size()},
                            {"longest_edge_before", longest_skeleton_edge(q)},
                            {"special_cone_angle", 2.0 * (1.0 + t_value) * M_PI},
                            {"max_cone_angle", special_max}},
                           0);
      };
    });
  }
  {
    auto* c = app.add_subcommand("check-andreev", "Andreev conditions for an angle assignment");
    c->add_option("polyhedron", in1)->required();
    c->add_option("angles", in2)->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const Report rep = check_andreev(polyhedron_from_json(read_json(in1)),
                                         angles_from_json(read_json(in2)));
        return emit_report(report, rep.ok() ? "ACCEPT" : "REJECT", rep,
                           {{"polyhedron", in1}, {"angles", in2}}, {}, rep.ok() ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("pogorelov-pair",
                                 "non-congruent hyperbolic prisms with equal edge lengths");
    c->add_option("--a", pa, "vertical edge length")->capture_default_str();
    c->add_option("--b", pb, "slant edge length")->capture_default_str();
    c->add_option("--c", pc, "far edge length")->capture_default_str();
    c->add_option("--u", pu, "first shear")->capture_default_str();
    c->add_option("--v", pv, "second shear")->capture_default_str();
    c->add_option("--out-f", out1, "half-space file for F")->required();
    c->add_option("--out-fprime", out2, "half-space file for F'")->required();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const CounterexamplePair pair = counterexample_pair(pa, pb, pc, pu, pv);
        write_text(out1, to_json(pair.f.halfspaces).dump(2) + "\n");
        write_text(out2, to_json(pair.f_prime.halfspaces).dump(2) + "\n");

        json edge_table = json::array();
        double max_diff = 0.0;
        for (const auto& e : EuclideanPrism::edges()) {
          auto len = [&](const ConvexPolyhedronH3& p, const std::array<CellId, 6>& ids) {
            for (const auto& er : p.combinatorics.edges)
              if ((er.tail == ids[std::size_t(e.v1)] && er.head == ids[std::size_t(e.v2)]) ||
                  (er.tail == ids[std::size_t(e.v2)] && er.head == ids[std::size_t(e.v1)]))
                return edge_length(p, er.id).value;
            throw ConstructionError("edge lost in the counterexample pair");
          };
          const double lf = len(pair.f, pair.f_vertex_ids);
          const double lfp = len(pair.f_prime, pair.fp_vertex_ids);
          max_diff = std::max(max_diff, std::abs(lf - lfp));
          edge_table.push_back({{"class", std::string(1, e.length_class)},
                                {"f", lf},
                                {"fprime", lfp}});
        }
        auto dihedrals = [](const ConvexPolyhedronH3& p) {
          std::vector<double> d;
          for (const auto& e : p.combinatorics.edges) d.push_back(dihedral_angle(p, e.id));
          std::sort(d.begin(), d.end());
          return d;
        };
        const bool congruent = are_congruent(pair.f, pair.f_prime, 1e-8);
        Report rep;
        rep.add("edge-lengths-match", max_diff < 1e-10,
                "max difference " + std::to_string(max_diff));
        rep.add("non-congruent", !congruent,
                congruent ? "internal error: images are congruent" : "");
        const json options = {{"a", pa}, {"b", pb}, {"c", pc}, {"u", pu}, {"v", pv},
                              {"out-f", out1}, {"out-fprime", out2}};
        const json metrics = {{"edges", edge_table},
                              {"dihedrals_f", dihedrals(pair.f)},
                              {"dihedrals_fprime", dihedrals(pair.f_prime)},
                              {"congruent", congruent}};
        if (congruent && pu != pv)
          return emit_report(report, "internal-error", rep, options, metrics, 1);
        return emit_report(report, "constructed", rep, options, metrics, rep.ok() ? 0 : 1);
      };
    });
  }
  {
    auto* c = app.add_subcommand("congruent", "metric congruence of two compact polyhedra");
    c->add_option("first", in1)->required();
    c->add_option("second", in2)->required();
    c->add_option("--tol", tol, "vertex matching tolerance")->capture_default_str();
    add_report(c);
    c->callback([&] {
      run = [&] {
        const auto p1 = build_from_halfspaces(halfspaces_from_json(read_json(in1)));
        const auto p2 = build_from_halfspaces(halfspaces_from_json(read_json(in2)));
        const bool congruent = are_congruent(p1, p2, tol);
        Report rep;
        rep.add("congruent", congruent);
        return emit_report(report, congruent ? "congruent" : "non-congruent", rep,
                           {{"first", in1}, {"second", in2}, {"tol", tol}}, {},
                           congruent ? 0 : 1);
      };
    });
  }

  try {
    app.parse(argc, argv);
    return run();
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
