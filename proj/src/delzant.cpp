#include "chowcheck/delzant.hpp"

#include <algorithm>

namespace chowcheck {

std::string_view to_string(DelzantFailureReason r) {
  switch (r) {
    case DelzantFailureReason::WrongEdgeCount:
      return "wrong-edge-count";
    case DelzantFailureReason::NotUnimodular:
      return "not-unimodular";
  }
  return "unknown";
}

DelzantVerdict is_delzant(const LatticePolytope& p) {
  DelzantVerdict verdict;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    auto edges = vertex_edge_directions(p, v);
    if (edges.size() != p.dim()) {
      verdict.failures.push_back(
          {v, p.vertices()[v], DelzantFailureReason::WrongEdgeCount, std::move(edges), Rational(0)});
      continue;
    }
    const Rational det = determinant(RatMatrix::from_rows(edges));
    if (abs(det) != 1) {
      verdict.failures.push_back({v, p.vertices()[v], DelzantFailureReason::NotUnimodular, std::move(edges), det});
    }
  }
  return verdict;
}

bool is_reflexive(const LatticePolytope& p) {
  const auto& ineqs = p.facets().inequalities;
  return std::all_of(ineqs.begin(), ineqs.end(), [](const Inequality& f) { return f.offset == 1; });
}

}  // namespace chowcheck
