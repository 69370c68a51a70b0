#include "chowcheck/git_weights.hpp"

#include "chowcheck/measure.hpp"
#include "chowcheck/obstruction.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace chowcheck {

WeightSet::WeightSet(std::size_t ambient_dim, std::vector<IntVector> weights)
    : ambient_dim_(ambient_dim), weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight set is empty");
  for (const auto& w : weights_) {
    if (w.size() != ambient_dim_) throw DimensionError("weight has wrong length");
  }
  std::sort(weights_.begin(), weights_.end());
  weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
}

bool is_torus_semistable(const WeightSet& w) {
  // λ ≥ 0 with Σ λ_j w_j = 0 and Σ λ_j = 1.
  const std::size_t m = w.ambient_dim();
  const std::size_t k = w.weights().size();
  RatMatrix a(m + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < m; ++r) a(r, j) = w.weights()[j][r];
    a(m, j) = 1;
  }
  RatVector b(m + 1);
  b[m] = 1;
  return find_nonnegative_solution(a, b).has_value();
}

WeightSet project_to_subtorus(const WeightSet& w) {
  const std::size_t m = w.ambient_dim();
  if (m < 2) throw DimensionError("projection to the subtorus needs ambient dimension at least 2");
  std::vector<IntVector> image;
  for (const auto& x : w.weights()) {
    IntVector y(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) y[i] = x[i] - x[m - 1];
    image.push_back(std::move(y));
  }
  return WeightSet(m - 1, std::move(image));
}

std::size_t AffineSubspace::dimension() const {
  if (equations.empty()) return ambient_dim;
  return ambient_dim - rank(RatMatrix(equations));
}

bool AffineSubspace::contains(const RatVector& x) const {
  for (std::size_t r = 0; r < equations.size(); ++r) {
    if (dot(equations[r], x) != rhs[r]) return false;
  }
  return true;
}

AffineSubspace affine_hull(const WeightSet& w) {
  const std::size_t m = w.ambient_dim();
  const auto& pts = w.weights();
  RatMatrix diffs(pts.size() - 1, m);
  for (std::size_t j = 1; j < pts.size(); ++j) {
    for (std::size_t c = 0; c < m; ++c) diffs(j - 1, c) = pts[j][c] - pts[0][c];
  }
  AffineSubspace hull;
  hull.ambient_dim = m;
  const RatVector base = to_rational(pts[0]);
  for (auto& normal : nullspace(diffs)) {
    hull.rhs.push_back(dot(normal, base));
    hull.equations.push_back(std::move(normal));
  }
  return hull;
}

DiagonalResult diagonal_in_affine_hull(const AffineSubspace& hull) {
  // Substituting x = (t, ..., t) turns each equation into (row sum)·t = rhs.
  std::optional<Rational> t;
  for (std::size_t r = 0; r < hull.equations.size(); ++r) {
    Rational row_sum = 0;
    for (const auto& c : hull.equations[r]) row_sum += c;
    if (row_sum == 0) {
      if (hull.rhs[r] != 0) return {DiagonalKind::None, Rational(0)};
      continue;
    }
    const Rational candidate = hull.rhs[r] / row_sum;
    if (t && *t != candidate) return {DiagonalKind::None, Rational(0)};
    t = candidate;
  }
  if (!t) return {DiagonalKind::WholeDiagonal, Rational(0)};
  return {DiagonalKind::Unique, *t};
}

DiagonalResult diagonal_in_affine_hull(const WeightSet& w) { return diagonal_in_affine_hull(affine_hull(w)); }

AffineSubspace chow_weight_affine_hull(std::span<const IntVector> a) {
  if (a.empty()) throw std::invalid_argument("empty point configuration");
  if (std::set<IntVector>(a.begin(), a.end()).size() != a.size()) {
    throw std::invalid_argument("point configuration has repeated points");
  }
  if (!affinely_generates_lattice(a)) {
    throw AffineGenerationError("point configuration does not affinely generate the lattice");
  }
  const std::size_t n = a.front().size();
  const std::size_t count = a.size();
  const LatticePolytope q = LatticePolytope::from_points(n, {a.begin(), a.end()});
  const MeasureData m = measure(q);
  Integer factorial = 1;
  for (unsigned long k = 2; k <= n + 1; ++k) factorial *= k;
  const Rational scale(factorial);

  AffineSubspace hull;
  hull.ambient_dim = count;
  hull.equations.emplace_back(count, Rational(1));
  hull.rhs.push_back(scale * m.volume);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector row(count);
    for (std::size_t j = 0; j < count; ++j) row[j] = a[j][c];
    hull.equations.push_back(std::move(row));
    hull.rhs.push_back(scale * m.moment[c]);
  }
  if (hull.dimension() != count - (n + 1)) {
    throw InternalError("Chow weight hull has unexpected dimension");
  }
  return hull;
}

}  // namespace chowcheck
