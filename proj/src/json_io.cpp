#include "unsharp/json_io.hpp"

#include <numbers>

namespace unsharp {

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
  return j.get<double>();
}

}  // namespace

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("expected a 3-vector [x, y, z]");
  return Vec3(number(j[0], "vector entry"), number(j[1], "vector entry"),
              number(j[2], "vector entry"));
}

Json vec3_to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("matrix: must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const Json& e = row[c];
      if (e.is_number()) {
        m(r, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = Complex(number(e[0], "matrix entry"), number(e[1], "matrix entry"));
      } else {
        throw std::invalid_argument("matrix: entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

Json qubit_effect_to_json(const QubitEffect& q) {
  return Json{{"a0", q.a0}, {"a", vec3_to_json(q.a)}};
}

QubitEffect qubit_effect_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a0") || !j.contains("a"))
    throw std::invalid_argument("qubit effect: expected {\"a0\": number, \"a\": [x,y,z]}");
  return QubitEffect(number(j["a0"], "a0"), vec3_from_json(j["a"]));
}

Effect effect_from_json(const Json& j) {
  if (j.is_object() && j.contains("a0")) return qubit_effect_to_matrix(qubit_effect_from_json(j));
  return Effect(matrix_from_json(j));
}

DensityOperator density_from_json(const Json& j) {
  return DensityOperator(matrix_from_json(j));
}

Json pom_to_json(const DiscretePOM& pom) {
  Json effects = Json::array();
  for (const auto& e : pom.effects()) effects.push_back(matrix_to_json(e.matrix()));
  return Json{{"outcomes", pom.outcomes()}, {"effects", std::move(effects)}};
}

DiscretePOM pom_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outcomes") || !j.contains("effects"))
    throw std::invalid_argument("POM: expected {\"outcomes\": [...], \"effects\": [...]}");
  std::vector<std::string> outcomes = j["outcomes"].get<std::vector<std::string>>();
  std::vector<Effect> effects;
  for (const auto& e : j["effects"]) effects.emplace_back(matrix_from_json(e));
  return DiscretePOM(std::move(outcomes), std::move(effects));
}

Json jm_report_to_json(const JMReport& r) {
  return Json{{"phiA", r.phiA},   {"phiB", r.phiB}, {"betaA", r.betaA}, {"betaB", r.betaB},
              {"F", r.F},         {"B", r.B},       {"x", r.x},         {"y", r.y},
              {"dot_ab", r.dot_ab}, {"margin", r.margin}, {"verdict", to_string(r.verdict)}};
}

Json oracle_result_to_json(const OracleResult& r) {
  Json effects = Json::array();
  for (const auto& e : r.candidate.effects)
    effects.push_back(Json{{"c0", e.c0}, {"c", vec3_to_json(e.c)}});
  return Json{{"verdict", to_string(r.verdict)},
              {"g0", r.candidate.g0},
              {"g", vec3_to_json(r.candidate.g)},
              {"effects", std::move(effects)},
              {"max_violation", r.candidate.max_violation}};
}

SphereRegion region_from_json(const Json& j) {
  if (j.is_object() && j.contains("cap")) {
    const Json& c = j["cap"];
    if (!c.is_object() || !c.contains("axis") || !c.contains("half_angle_deg"))
      throw std::invalid_argument("cap region: expected {\"axis\": [...], \"half_angle_deg\": d}");
    const double deg = number(c["half_angle_deg"], "half_angle_deg");
    return Cap{vec3_from_json(c["axis"]), deg * std::numbers::pi / 180.0};
  }
  if (j.is_object() && j.contains("hemisphere")) {
    const Json& h = j["hemisphere"];
    if (!h.is_object() || !h.contains("axis"))
      throw std::invalid_argument("hemisphere region: expected {\"axis\": [...]}");
    return Hemisphere{vec3_from_json(h["axis"])};
  }
  throw std::invalid_argument("region: expected {\"cap\": ...} or {\"hemisphere\": ...}");
}

Json classical_state_to_json(const ClassicalState& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back(Json{{"bloch", vec3_to_json(a.point.bloch)}, {"w", a.weight}});
  return Json{{"atoms", std::move(atoms)}};
}

ClassicalState classical_state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw std::invalid_argument("classical state: expected {\"atoms\": [...]}");
  std::vector<ClassicalState::Atom> atoms;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("bloch") || !a.contains("w"))
      throw std::invalid_argument("classical state atom: expected {\"bloch\": [...], \"w\": number}");
    atoms.push_back({PurePoint(vec3_from_json(a["bloch"])), number(a["w"], "weight")});
  }
  return ClassicalState(std::move(atoms));
}

PointMap point_map_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("point map: expected an object");
  PointMap map = PointMap::identity();
  if (j.contains("rotation")) {
    const Json& r = j["rotation"];
    if (!r.is_array() || r.size() != 3) throw std::invalid_argument("point map: rotation must be 3x3");
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i) {
      if (!r[i].is_array() || r[i].size() != 3)
        throw std::invalid_argument("point map: rotation must be 3x3");
      for (int c = 0; c < 3; ++c) m(i, c) = number(r[i][c], "rotation entry");
    }
    map = PointMap::rotation(m);
  }
  if (j.value("antipodal", false)) map = PointMap::rotation(-map.matrix());
  return map;
}

Json witness_to_json(const SurjectivityWitness& w) {
  return Json{{"f", {w.f(0), w.f(1), w.f(2), w.f(3)}},
              {"proper", w.proper},
              {"violates_lower", w.violates_lower},
              {"violates_upper", w.violates_upper}};
}

}  // namespace unsharp
