#pragma once

// Lattice points of dilates iP: enumeration, counts E_P(i) and coordinate
// sums s_P(i).
//
// The enumerator precomputes, for a fixed coordinate order, the exact
// halfspace description of every coordinate projection of P (Fourier-Motzkin
// elimination, pruned back to facets using the projected vertices). Walking
// the coordinates outermost-first then never visits an empty slice, and the
// innermost coordinate is summed in closed form.

#include "chowcheck/polytope.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace chowcheck {

struct DilationData {
  long level = 0;
  Integer count;
  IntVector coordinate_sum;

  friend bool operator==(const DilationData&, const DilationData&) = default;
};

enum class CoordinateOrder {
  Natural,          // x_1 outermost; points come out in lexicographic order
  WidestInnermost,  // fewest visited slices for aggregate-only runs
};

class LatticePointEnumerator {
 public:
  explicit LatticePointEnumerator(const LatticePolytope& p,
                                  CoordinateOrder order = CoordinateOrder::WidestInnermost);

  std::size_t dim() const { return dim_; }

  /// Count and coordinate sum of (level·P) ∩ Z^n without materializing the
  /// points. Work is split over the outermost coordinate across `jobs`
  /// threads; the result does not depend on `jobs`.
  DilationData count_and_sum(long level, unsigned jobs = 1) const;

  /// Visits every lattice point of level·P once. Points arrive in
  /// lexicographic order when the enumerator uses CoordinateOrder::Natural.
  void for_each_point(long level, const std::function<void(const IntVector&)>& visit) const;

  /// Halfspace description of the projection onto the first k+1 coordinates
  /// of the enumeration order (for k = dim-1 this is P itself, permuted).
  const HalfspaceRep& projection(std::size_t k) const { return chain_[k]; }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::size_t dim_;
  std::vector<std::size_t> order_;  // order_[k] = original coordinate walked at depth k
  std::vector<HalfspaceRep> chain_;
  Integer max_abs_vertex_coordinate_;
};

/// Lattice points of level·P in lexicographic order.
std::vector<IntVector> enumerate(const LatticePolytope& p, long level);

DilationData count_and_sum(const LatticePolytope& p, long level, unsigned jobs = 1);

/// count_and_sum at every requested level, sharing one enumerator.
std::vector<DilationData> count_and_sum_levels(const LatticePolytope& p, const std::vector<long>& levels,
                                               unsigned jobs = 1);

/// Lattice points in the interior of P (level 1).
Integer interior_point_count(const LatticePolytope& p);

}  // namespace chowcheck
