#pragma once

#include <json.hpp>

#include "hpolar/abstract_poly.hpp"
#include "hpolar/andreev.hpp"
#include "hpolar/cone_metric.hpp"
#include "hpolar/hpolyhedron.hpp"

namespace hpolar {

using nlohmann::json;

// Abstract polyhedron: {vertices:[id], edges:[{id,tail,head}],
// faces:[{id, boundary:[signed edge id]}]}. Edge ids must be positive so the sign
// carries the orientation.
json to_json(const AbstractPolyhedron& p);
AbstractPolyhedron polyhedron_from_json(const json& j);

// Half-space list: [{n0,n1,n2,n3}] with de Sitter normals in ambient coordinates.
json to_json(const std::vector<HalfSpace>& hs);
std::vector<HalfSpace> halfspaces_from_json(const json& j);

// Cone metric: {cells:[{sides:[r], angles:[r]}], gluings:[[cell,side,cell,side]]}.
json to_json(const ConeMetricSurface& q);
ConeMetricSurface cone_metric_from_json(const json& j);

// Angle assignment: {"<edge-id>": radians}.
json to_json(const AngleAssignment& a);
AngleAssignment angles_from_json(const json& j);

json to_json(const Report& rep);

}  // namespace hpolar
