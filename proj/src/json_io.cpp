#include "chowcheck/json_io.hpp"

#include <algorithm>

namespace chowcheck {

Json to_json(const Integer& z) { return z.get_str(); }
Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: " + j.dump());
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json to_json(const LatticePolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  Json facets = Json::array();
  for (const auto& f : p.facets().inequalities) {
    facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  }
  return {{"dim", p.dim()}, {"vertices", vertices}, {"facets", facets}};
}

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polytope must be a JSON object");
  if (!j.contains("dim")) throw InputError("polytope is missing \"dim\"");
  const Integer dim_value = integer_from_json(j.at("dim"));
  if (dim_value < 1 || dim_value > 64) throw InputError("polytope \"dim\" out of range");
  const auto dim = static_cast<std::size_t>(dim_value.get_ui());

  std::optional<std::vector<IntVector>> points;
  if (j.contains("vertices")) {
    if (!j.at("vertices").is_array()) throw InputError("\"vertices\" must be an array");
    points.emplace();
    for (const auto& v : j.at("vertices")) {
      points->push_back(int_vector_from_json(v));
      if (points->back().size() != dim) throw InputError("vertex length does not match \"dim\"");
    }
  }
  if (j.contains("facets")) {
    if (!j.at("facets").is_array()) throw InputError("\"facets\" must be an array");
    HalfspaceRep h{dim, {}};
    for (const auto& f : j.at("facets")) {
      if (!f.is_object() || !f.contains("normal") || !f.contains("offset")) {
        throw InputError("facet needs \"normal\" and \"offset\"");
      }
      h.inequalities.push_back({int_vector_from_json(f.at("normal")), integer_from_json(f.at("offset"))});
      if (h.inequalities.back().normal.size() != dim) throw InputError("facet normal length does not match \"dim\"");
    }
    LatticePolytope p = LatticePolytope::from_halfspaces(h);
    // Listed vertices must be exactly the vertices of the facet description.
    if (points) {
      std::sort(points->begin(), points->end());
      points->erase(std::unique(points->begin(), points->end()), points->end());
      if (*points != p.vertices()) throw InputError("\"vertices\" and \"facets\" describe different polytopes");
    }
    return p;
  }
  if (points) return LatticePolytope::from_points(dim, std::move(*points));
  throw InputError("polytope needs \"vertices\" or \"facets\"");
}

Json to_json(const DilationData& d) {
  return {{"level", d.level}, {"count", to_json(d.count)}, {"sum", to_json(d.coordinate_sum)}};
}

Json to_json(const EhrhartPolynomial& e) {
  Json c = Json::array();
  for (const auto& x : e.coefficients()) c.push_back(to_json(x));
  return {{"lowest_degree", 0}, {"coefficients", c}};
}

Json to_json(const SumPolynomial& s) {
  Json c = Json::array();
  for (const auto& x : s.coefficients()) c.push_back(to_json(x));
  return {{"lowest_degree", 1}, {"coefficients", c}};
}

Json to_json(const MeasureData& m) {
  return {{"volume", to_json(m.volume)}, {"moment", to_json(m.moment)}, {"barycenter", to_json(m.barycenter)}};
}

Json to_json(const DelzantVerdict& v) {
  Json failures = Json::array();
  for (const auto& f : v.failures) {
    Json edges = Json::array();
    for (const auto& e : f.edge_directions) edges.push_back(to_json(e));
    failures.push_back({{"vertex", to_json(f.vertex)},
                        {"reason", std::string(to_string(f.reason))},
                        {"edge_matrix", edges},
                        {"determinant", to_json(f.determinant)}});
  }
  return {{"is_delzant", v.is_delzant()}, {"failures", failures}};
}

Json to_json(const ObstructionReport& r) {
  Json vectors = Json::array();
  for (const auto& f : r.vectors) vectors.push_back(to_json(f));
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"level", l.level},
                      {"count", to_json(l.count)},
                      {"sum", to_json(l.sum)},
                      {"residual", to_json(l.residual)}});
  }
  return {{"polytope", r.polytope_id},
          {"dim", r.dim},
          {"reflexive", r.reflexive},
          {"measure", to_json(r.measure)},
          {"ehrhart", to_json(r.ehrhart)},
          {"sum_polynomial", to_json(r.sum)},
          {"obstruction_vectors", vectors},
          {"span_rank", r.span_rank},
          {"levels", levels},
          {"verdict", std::string(to_string(r.verdict))},
          {"unstable_levels", r.unstable_levels},
          {"decides_all_levels", r.levels.size() >= r.dim + 1}};
}

Json to_json(const HilbertTruncation& t, const SeriesCheck& check) {
  Json degrees = Json::array();
  for (std::size_t k = 0; k < t.per_degree.size(); ++k) {
    degrees.push_back({{"degree", t.per_degree[k].level},
                       {"count", to_json(t.per_degree[k].count)},
                       {"derivative", to_json(t.derivative_series[k])},
                       {"expected", to_json(t.expected_series[k])}});
  }
  Json out = {{"order", t.order},
              {"series", degrees},
              {"passes", check.passes},
              {"failing_degrees", check.failing_degrees},
              {"reflexive", check.reflexive},
              {"nonzero_derivative_degrees", check.nonzero_derivative_degrees}};
  out["first_failing_degree"] = check.first_failing_degree ? Json(*check.first_failing_degree) : Json(nullptr);
  return out;
}

Json to_json(const WeightSet& w) {
  Json ws = Json::array();
  for (const auto& x : w.weights()) ws.push_back(to_json(x));
  return {{"ambient_dim", w.ambient_dim()}, {"weights", ws}};
}

Json to_json(const DiagonalResult& d) {
  switch (d.kind) {
    case DiagonalKind::None:
      return {{"kind", "none"}};
    case DiagonalKind::Unique:
      return {{"kind", "unique"}, {"t", to_json(d.t)}};
    case DiagonalKind::WholeDiagonal:
      return {{"kind", "whole-diagonal"}};
  }
  return {};
}

WeightSet weights_from_json(const Json& j) {
  const Json& list = j.is_object() && j.contains("weights") ? j.at("weights") : j;
  if (!list.is_array() || list.empty()) throw InputError("expected a nonempty list of weights");
  std::vector<IntVector> weights;
  for (const auto& w : list) weights.push_back(int_vector_from_json(w));
  const std::size_t m = weights.front().size();
  if (m == 0) throw InputError("weights must have at least one coordinate");
  for (const auto& w : weights) {
    if (w.size() != m) throw InputError("weights have different lengths");
  }
  return WeightSet(m, std::move(weights));
}

}  // namespace chowcheck
