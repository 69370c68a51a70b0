#pragma once

// Smoothness (Delzant) and reflexivity tests for lattice polytopes.

#include "chowcheck/polytope.hpp"

#include <string_view>
#include <vector>

namespace chowcheck {

enum class DelzantFailureReason { WrongEdgeCount, NotUnimodular };

std::string_view to_string(DelzantFailureReason r);

struct DelzantFailure {
  std::size_t vertex_index;
  IntVector vertex;
  DelzantFailureReason reason;
  std::vector<IntVector> edge_directions;  // rows of the offending edge matrix
  Rational determinant;                    // 0 when the edge count is wrong
};

struct DelzantVerdict {
  std::vector<DelzantFailure> failures;

  bool is_delzant() const { return failures.empty(); }
};

/// Every vertex must have exactly dim edges whose primitive directions form a
/// lattice basis (determinant ±1).
DelzantVerdict is_delzant(const LatticePolytope& p);

/// Origin strictly inside and every facet at lattice distance one, i.e. every
/// offset equals 1 in the <normal, x> + offset >= 0 convention.
bool is_reflexive(const LatticePolytope& p);

}  // namespace chowcheck
