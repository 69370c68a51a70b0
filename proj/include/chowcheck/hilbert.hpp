#pragma once

// Truncations of the Hilbert series of the cone over P × {1}.
//
// For integral P the height-i slice of the cone's lattice points is exactly
// iP ∩ Z^n lifted to height i, so the gradient of the Hilbert series at
// (1, ..., 1, t) is the generating function Σ_i s_P(i) t^i. Only truncations
// are ever formed; the series is never manipulated as a rational function.

#include "chowcheck/lattice_points.hpp"
#include "chowcheck/measure.hpp"

#include <optional>
#include <vector>

namespace chowcheck {

struct HilbertTruncation {
  long order = 0;
  std::vector<DilationData> per_degree;      // i = 1..order
  std::vector<RatVector> derivative_series;  // coefficient of t^i: s_P(i)
  std::vector<RatVector> expected_series;    // coefficient of t^i: i·E_P(i)·∫x / vol
};

/// Lattice points of the cone at height i, as (a, i).
std::vector<IntVector> cone_slice(const LatticePolytope& p, long i);

HilbertTruncation derivative_series(const LatticePolytope& p, long order, unsigned jobs = 1);

struct SeriesCheck {
  bool passes = true;
  std::optional<long> first_failing_degree;
  std::vector<long> failing_degrees;           // derivative ≠ expected series
  bool reflexive = false;
  std::vector<long> nonzero_derivative_degrees;  // reflexive only: s_P(i) ≠ 0
};

/// Compares Σ s_P(i) t^i with (Σ i E_P(i) t^i)·∫x/vol up to t^order. For
/// reflexive P additionally requires every derivative coefficient to vanish.
SeriesCheck semistable_series_check(const LatticePolytope& p, long order, unsigned jobs = 1);
SeriesCheck semistable_series_check(const HilbertTruncation& t, const MeasureData& m, bool reflexive);

}  // namespace chowcheck
