#pragma once

// Exact volume and first moment of a lattice polytope, summed over a star
// triangulation.

#include "chowcheck/polytope.hpp"

namespace chowcheck {

struct MeasureData {
  Rational volume;
  RatVector moment;      // integral of x over the polytope
  RatVector barycenter;  // moment / volume
};

Rational volume(const LatticePolytope& p);

/// Integral of the coordinate functions: sum over cells of
/// vol(S) * (v_0 + ... + v_n) / (n + 1).
RatVector moment(const LatticePolytope& p);

MeasureData measure(const LatticePolytope& p, ApexRule rule = ApexRule::LexSmallest);

}  // namespace chowcheck
