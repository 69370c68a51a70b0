#pragma once

// Torus-semistability toolkit: weight polytopes, the origin-in-hull test, the
// projection to the subtorus H = {(t_1, ..., t_n, (t_1···t_n)^{-1})}, and the
// "diagonal point in the affine hull" condition used for Chow forms of toric
// point configurations.

#include "chowcheck/exact_linalg.hpp"

#include <span>
#include <vector>

namespace chowcheck {

/// Characters in Z^m occurring in a vector of a torus module.
class WeightSet {
 public:
  /// Sorts and removes duplicates; throws on an empty set or length mismatch.
  WeightSet(std::size_t ambient_dim, std::vector<IntVector> weights);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& weights() const { return weights_; }

  friend bool operator==(const WeightSet&, const WeightSet&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> weights_;
};

/// 0 ∈ conv(weights), decided by exact Phase I simplex.
bool is_torus_semistable(const WeightSet& w);

/// (x_1, ..., x_{m}) ↦ (x_1 − x_m, ..., x_{m−1} − x_m).
WeightSet project_to_subtorus(const WeightSet& w);

/// {x ∈ R^m : equations · x = rhs}; assumed nonempty.
struct AffineSubspace {
  std::size_t ambient_dim = 0;
  std::vector<RatVector> equations;
  RatVector rhs;

  std::size_t dimension() const;
  bool contains(const RatVector& x) const;
};

AffineSubspace affine_hull(const WeightSet& w);

enum class DiagonalKind {
  None,           // no (t, ..., t) lies in the hull
  Unique,         // exactly one t
  WholeDiagonal,  // every (t, ..., t) lies in the hull
};

struct DiagonalResult {
  DiagonalKind kind = DiagonalKind::None;
  Rational t;  // meaningful for Unique only
};

DiagonalResult diagonal_in_affine_hull(const AffineSubspace& hull);
DiagonalResult diagonal_in_affine_hull(const WeightSet& w);

/// Affine hull of the weight polytope of the Chow form of X_A for a point
/// configuration a_1..a_{N+1} in Z^n with Q = conv(a):
///   Σ φ_j = (n+1)!·vol(Q),   Σ φ_j a_j = (n+1)!·∫_Q x dv.
/// Its dimension is checked to be (N+1) − (n+1).
AffineSubspace chow_weight_affine_hull(std::span<const IntVector> a);

}  // namespace chowcheck
