#pragma once

// The combinatorial obstruction to Chow semistability of a polarized toric
// manifold (X_P, L_P^i).
//
// If (X_P, L_P^i) is Chow semistable then the lattice points of iP sum to
// i·E_P(i)/vol(P) times the first moment of P. Everything here is reported in
// the cleared form
//
//     R(i) = vol(P)·s_P(i) − i·E_P(i)·∫_P x dv,
//
// which is a vector polynomial in i of degree at most n+1 with zero constant
// term. Its coefficients are the obstruction vectors
//
//     F_j = vol(P)·s_{P,j} − E_{P,j−1}·∫_P x dv,   j = 1..n
//
// (the t^{n+1} coefficient always cancels). Vanishing at i = 1..n+1 therefore
// means vanishing for every i.

#include "chowcheck/delzant.hpp"
#include "chowcheck/ehrhart.hpp"
#include "chowcheck/lattice_points.hpp"
#include "chowcheck/measure.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chowcheck {

enum class VerdictKind {
  ObstructionVanishes,  // necessary condition holds; semistability not decided
  ChowUnstableAt,       // R(i) ≠ 0 at the listed levels
  ReflexiveSemistable,  // reflexive, R ≡ 0 and ∫x = 0: asymptotically Chow semistable
  ReflexiveUnstable,    // reflexive, R ≡ 0 but ∫x ≠ 0 (Futaki invariant nonzero)
};

std::string_view to_string(VerdictKind v);

struct LevelResidual {
  long level;
  Integer count;      // E_P(i)
  IntVector sum;      // s_P(i)
  RatVector residual; // R(i), from the raw enumeration
};

struct ObstructionReport {
  std::string polytope_id;
  std::size_t dim = 0;
  bool reflexive = false;
  MeasureData measure;
  EhrhartPolynomial ehrhart;
  SumPolynomial sum;
  std::vector<RatVector> vectors;  // F_1..F_n
  std::size_t span_rank = 0;       // rank of {F_j}
  std::vector<LevelResidual> levels;
  VerdictKind verdict = VerdictKind::ObstructionVanishes;
  std::vector<long> unstable_levels;
};

class NotDelzantError : public std::invalid_argument {
 public:
  explicit NotDelzantError(DelzantFailure failure);
  const DelzantFailure& failure() const { return failure_; }

 private:
  DelzantFailure failure_;
};

/// The configuration's differences do not generate Z^n as a lattice.
class AffineGenerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// vol·s − i·E·∫x from one level's enumeration data.
RatVector residual_from(const DilationData& d, const MeasureData& m);

/// R(i) computed from a fresh enumeration of iP.
RatVector residual_at(const LatticePolytope& p, long i, unsigned jobs = 1);

/// F_1..F_n from interpolated polynomials. Throws InternalError if the t^{n+1}
/// coefficient fails to cancel.
std::vector<RatVector> obstruction_vectors(const EhrhartPolynomial& e, const SumPolynomial& s,
                                           const MeasureData& m);
std::vector<RatVector> obstruction_vectors(const LatticePolytope& p, unsigned jobs = 1);

/// Σ_j i^j F_j.
RatVector residual_from_vectors(const std::vector<RatVector>& vectors, long i);

struct VerdictOptions {
  long i_max = 0;  // 0 means n + 1
  unsigned jobs = 1;
  std::string polytope_id;
};

/// Full report for a Delzant polytope over levels 1..max(i_max, n+1). Throws
/// NotDelzantError for non-smooth input, and InternalError if the enumeration
/// and interpolation paths disagree.
ObstructionReport verdict(const LatticePolytope& p, const VerdictOptions& options = {});

/// True when the differences a_j − a_0 generate Z^n (gcd of maximal minors 1).
bool affinely_generates_lattice(std::span<const IntVector> a);

/// Σ_j a_j − (N+1)/vol(Q)·∫_Q x dv for Q = conv(a); zero iff the point
/// configuration passes the necessary condition for Chow semistability of X_A.
RatVector check_point_configuration(std::span<const IntVector> a);

}  // namespace chowcheck
