#pragma once

#include "unsharp/classical.hpp"
#include "unsharp/joint_measurability.hpp"
#include "unsharp/operators.hpp"
#include "unsharp/sphere_pom.hpp"

#include <json.hpp>

#include <string>

namespace unsharp {

using Json = nlohmann::json;

// Complex entries are [re, im]; matrices are arrays of rows.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json qubit_effect_to_json(const QubitEffect& q);
QubitEffect qubit_effect_from_json(const Json& j);

// An effect parses either from {"a0":., "a":[..]} or from a raw matrix.
Effect effect_from_json(const Json& j);
DensityOperator density_from_json(const Json& j);

Json pom_to_json(const DiscretePOM& pom);
DiscretePOM pom_from_json(const Json& j);

Json jm_report_to_json(const JMReport& r);
Json oracle_result_to_json(const OracleResult& r);

// {"cap": {"axis": [x,y,z], "half_angle_deg": d}} or
// {"hemisphere": {"axis": [x,y,z]}}
SphereRegion region_from_json(const Json& j);

Json classical_state_to_json(const ClassicalState& mu);
ClassicalState classical_state_from_json(const Json& j);

// {"rotation": [[..],[..],[..]]} and/or {"antipodal": true}; antipodal is
// applied after the rotation.
PointMap point_map_from_json(const Json& j);

Json witness_to_json(const SurjectivityWitness& w);

Vec3 vec3_from_json(const Json& j);
Json vec3_to_json(const Vec3& v);

}  // namespace unsharp
