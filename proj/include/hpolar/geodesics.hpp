#pragma once

#include <cstdint>
#include <string>

#include "hpolar/cone_metric.hpp"

namespace hpolar {

enum class GeodesicVerdict { Certified, Refuted, Inconclusive };

struct GeodesicSearchOptions {
  int max_depth = 0;                    // cells crossed; 0 means 3 * cell count
  std::uint64_t node_budget = 4000000;  // DFS node cap before going inconclusive
  double length_cutoff = 2.0 * M_PI;    // looking for closed geodesics <= this
  double tol = 1e-9;
};

// Outcome of the depth-bounded search for short closed geodesics.
//   Refuted: a closed geodesic of length <= cutoff exists; witness is filled and
//            sound regardless of the depth bound.
//   Certified: no such geodesic crosses <= depth cells (up to numerical tolerance).
//   Inconclusive: budget exhausted or a degenerate family required sampling.
struct GeodesicSearchResult {
  GeodesicVerdict verdict = GeodesicVerdict::Inconclusive;
  int depth = 0;
  double witness_length = 0.0;
  std::string witness;  // reconstructible description of the refuting geodesic
  std::string note;
};

GeodesicSearchResult search_short_geodesics(const ConeMetricSurface& q,
                                            const GeodesicSearchOptions& opts = {});

}  // namespace hpolar
