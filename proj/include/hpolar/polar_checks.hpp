#pragma once

#include "hpolar/cone_metric.hpp"
#include "hpolar/geodesics.hpp"

namespace hpolar {

// Rivin admissibility of a cone metric: sphere topology, piecewise spherical cells,
// all cone angles > 2pi, and no closed geodesic of length <= 2pi (condition 4 is
// decided by the depth-bounded search and may come back inconclusive).
struct AdmissibilityReport {
  CheckResult sphere_check, curvature_check, cone_angle_check;
  GeodesicSearchResult geodesic_check;

  bool conditions_1_to_3() const {
    return sphere_check.pass && curvature_check.pass && cone_angle_check.pass;
  }
  bool admissible_certified() const {
    return conditions_1_to_3() && geodesic_check.verdict == GeodesicVerdict::Certified;
  }
  bool refuted() const {
    return !conditions_1_to_3() || geodesic_check.verdict == GeodesicVerdict::Refuted;
  }
};

AdmissibilityReport check_admissible(const ConeMetricSurface& q, int max_depth = 0);

// Ideal admissibility: sphere topology, polyhedral cell combinatorics, hemisphere
// cells, gluing lengths in (0, pi), and every simple non-facial 1-skeleton cycle
// longer than 2pi.
Report check_ideally_admissible(const ConeMetricSurface& q);

// Longest 1-skeleton edge e1(Q).
double longest_skeleton_edge(const ConeMetricSurface& q);

// Replaces each hemisphere cell by its fan of triangles with radial sides pi/2 and
// boundary arcs scaled by (1+t). Requires Q ideally admissible and
// 0 < t < pi/e1(Q) - 1.
ConeMetricSurface t_expansion(const ConeMetricSurface& q, double t);

}  // namespace hpolar
