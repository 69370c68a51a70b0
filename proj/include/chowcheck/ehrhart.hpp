#pragma once

// Ehrhart polynomial E_P(t) = #(tP ∩ Z^n) and the vector-valued sum
// polynomial s_P(t) = Σ_{a ∈ tP ∩ Z^n} a, recovered by exact interpolation.

#include "chowcheck/lattice_points.hpp"
#include "chowcheck/measure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chowcheck {

class EhrhartPolynomial {
 public:
  EhrhartPolynomial() = default;
  /// coefficients[j] multiplies t^j.
  explicit EhrhartPolynomial(std::vector<Rational> coefficients);

  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of t^j; zero beyond the degree.
  Rational coefficient(std::size_t j) const;
  Rational operator()(const Rational& t) const;

  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Polynomial with vector coefficients and no constant term.
class SumPolynomial {
 public:
  SumPolynomial() = default;
  /// coefficients[j - 1] multiplies t^j, j = 1..degree.
  SumPolynomial(std::size_t dim, std::vector<RatVector> coefficients);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return coefficients_.size(); }
  const std::vector<RatVector>& coefficients() const { return coefficients_; }
  /// Coefficient of t^j for j ≥ 1 (zero vector beyond the degree); j = 0 is
  /// the zero vector.
  RatVector coefficient(std::size_t j) const;
  RatVector operator()(const Rational& t) const;

  friend bool operator==(const SumPolynomial&, const SumPolynomial&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<RatVector> coefficients_;
};

/// Coefficients c_lowest..c_{lowest+len-1} of the unique polynomial
/// Σ c_j t^j through (nodes[r], values[r]), len = nodes.size(). Nodes must be
/// distinct (and nonzero when lowest > 0).
std::vector<Rational> interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                  std::size_t lowest_degree = 0);

/// E_P through (i, E_P(i)) for i = 0..n, using E_P(0) = 1.
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p, unsigned jobs = 1);
/// Same, from precomputed data for levels 1..n (any order, extra levels ignored).
EhrhartPolynomial ehrhart_from_data(std::size_t dim, const std::vector<DilationData>& data);

/// s_P through (i, s_P(i)) for i = 1..n+1.
SumPolynomial sum_polynomial(const LatticePolytope& p, unsigned jobs = 1);
SumPolynomial sum_from_data(std::size_t dim, const std::vector<DilationData>& data);

/// Interpolation on caller-chosen distinct positive levels (n of them for E,
/// n+1 for s); used to confirm the result does not depend on the nodes.
EhrhartPolynomial ehrhart_polynomial_at_levels(const LatticePolytope& p, const std::vector<long>& levels);
SumPolynomial sum_polynomial_at_levels(const LatticePolytope& p, const std::vector<long>& levels);

struct ClosedForms {
  EhrhartPolynomial ehrhart;
  SumPolynomial sum;
};

/// Both polynomials of an integral polygon from vol(P), ∫_P x, E_P(1), E_P(2),
/// s_P(1), s_P(2) alone.
ClosedForms polygon_closed_forms(const LatticePolytope& p);

struct LevelMismatch {
  long level;
  Rational count_residual;  // E(level) - #points
  RatVector sum_residual;   // s(level) - Σ points
};

struct ValidationReport {
  std::vector<LevelMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string describe() const;
};

/// Re-checks both polynomials against enumeration at levels n+2 .. n+1+extra.
ValidationReport validate(const EhrhartPolynomial& e, const SumPolynomial& s, const LatticePolytope& p,
                          long extra_levels, unsigned jobs = 1);

/// Ehrhart reciprocity: (-1)^n E(-1) equals the number of interior points.
bool reciprocity_holds(const EhrhartPolynomial& e, const LatticePolytope& p);

}  // namespace chowcheck
