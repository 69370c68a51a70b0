#include "chowcheck/obstruction.hpp"

#include "combinations.hpp"

#include <algorithm>
#include <set>

namespace chowcheck {

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::ObstructionVanishes:
      return "OBSTRUCTION_VANISHES";
    case VerdictKind::ChowUnstableAt:
      return "CHOW_UNSTABLE_AT";
    case VerdictKind::ReflexiveSemistable:
      return "REFLEXIVE_SEMISTABLE";
    case VerdictKind::ReflexiveUnstable:
      return "REFLEXIVE_UNSTABLE";
  }
  return "UNKNOWN";
}

namespace {

std::string describe_failure(const DelzantFailure& f) {
  std::string s = "polytope is not Delzant: vertex (";
  for (std::size_t c = 0; c < f.vertex.size(); ++c) s += (c ? "," : "") + to_string(f.vertex[c]);
  s += ") fails with ";
  s += to_string(f.reason);
  return s;
}

}  // namespace

NotDelzantError::NotDelzantError(DelzantFailure failure)
    : std::invalid_argument(describe_failure(failure)), failure_(std::move(failure)) {}

RatVector residual_from(const DilationData& d, const MeasureData& m) {
  const Rational weight = Rational(d.level) * Rational(d.count);
  return m.volume * to_rational(d.coordinate_sum) - weight * m.moment;
}

RatVector residual_at(const LatticePolytope& p, long i, unsigned jobs) {
  return residual_from(count_and_sum(p, i, jobs), measure(p));
}

std::vector<RatVector> obstruction_vectors(const EhrhartPolynomial& e, const SumPolynomial& s,
                                           const MeasureData& m) {
  const std::size_t n = s.dim();
  std::vector<RatVector> vectors;
  for (std::size_t j = 1; j <= n; ++j) {
    vectors.push_back(m.volume * s.coefficient(j) - e.coefficient(j - 1) * m.moment);
  }
  const RatVector top = m.volume * s.coefficient(n + 1) - e.coefficient(n) * m.moment;
  if (!is_zero(top)) throw InternalError("degree n+1 coefficient of the residual polynomial does not cancel");
  return vectors;
}

std::vector<RatVector> obstruction_vectors(const LatticePolytope& p, unsigned jobs) {
  std::vector<long> levels;
  for (long i = 1; i <= static_cast<long>(p.dim()) + 1; ++i) levels.push_back(i);
  const auto data = count_and_sum_levels(p, levels, jobs);
  return obstruction_vectors(ehrhart_from_data(p.dim(), data), sum_from_data(p.dim(), data), measure(p));
}

RatVector residual_from_vectors(const std::vector<RatVector>& vectors, long i) {
  if (vectors.empty()) return {};
  RatVector r(vectors.front().size());
  Rational power = 1;
  for (const auto& f : vectors) {
    power *= i;
    r = r + power * f;
  }
  return r;
}

ObstructionReport verdict(const LatticePolytope& p, const VerdictOptions& options) {
  const DelzantVerdict smooth = is_delzant(p);
  if (!smooth.is_delzant()) throw NotDelzantError(smooth.failures.front());

  const std::size_t n = p.dim();
  const long top = std::max(options.i_max, static_cast<long>(n) + 1);
  std::vector<long> levels;
  for (long i = 1; i <= top; ++i) levels.push_back(i);

  ObstructionReport report;
  report.polytope_id = options.polytope_id;
  report.dim = n;
  report.reflexive = is_reflexive(p);
  report.measure = measure(p);
  const auto data = count_and_sum_levels(p, levels, options.jobs);
  report.ehrhart = ehrhart_from_data(n, data);
  report.sum = sum_from_data(n, data);
  report.vectors = obstruction_vectors(report.ehrhart, report.sum, report.measure);
  report.span_rank = rank(RatMatrix(report.vectors));

  for (const auto& d : data) {
    RatVector r = residual_from(d, report.measure);
    if (r != residual_from_vectors(report.vectors, d.level)) {
      throw InternalError("level " + std::to_string(d.level) +
                          ": enumerated residual disagrees with the interpolated obstruction vectors");
    }
    if (!is_zero(r)) report.unstable_levels.push_back(d.level);
    report.levels.push_back({d.level, d.count, d.coordinate_sum, std::move(r)});
  }

  if (!report.unstable_levels.empty()) {
    report.verdict = VerdictKind::ChowUnstableAt;
  } else if (report.reflexive) {
    const bool sums_vanish = std::all_of(report.sum.coefficients().begin(), report.sum.coefficients().end(),
                                         [](const RatVector& c) { return is_zero(c); });
    report.verdict = is_zero(report.measure.moment) && sums_vanish ? VerdictKind::ReflexiveSemistable
                                                                   : VerdictKind::ReflexiveUnstable;
  } else {
    report.verdict = VerdictKind::ObstructionVanishes;
  }
  return report;
}

bool affinely_generates_lattice(std::span<const IntVector> a) {
  if (a.empty()) return false;
  const std::size_t n = a.front().size();
  if (a.size() < n + 1) return false;
  std::vector<IntVector> diffs;
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j].size() != n) throw DimensionError("point has wrong length");
    diffs.push_back(a[j] - a[0]);
  }
  Integer g = 0;
  bool done = false;
  for_each_combination(diffs.size(), n, [&](const std::vector<std::size_t>& idx) {
    if (done) return;
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = diffs[idx[r]][c];
    }
    const Integer minor = determinant(m).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
    done = g == 1;
  });
  return g == 1;
}

RatVector check_point_configuration(std::span<const IntVector> a) {
  if (a.empty()) throw std::invalid_argument("empty point configuration");
  const std::set<IntVector> distinct(a.begin(), a.end());
  if (distinct.size() != a.size()) throw std::invalid_argument("point configuration has repeated points");
  if (!affinely_generates_lattice(a)) {
    throw AffineGenerationError("point configuration does not affinely generate the lattice");
  }
  const std::size_t n = a.front().size();
  const LatticePolytope q = LatticePolytope::from_points(n, {a.begin(), a.end()});
  const MeasureData m = measure(q);
  IntVector total = zero_int_vector(n);
  for (const auto& x : a) total = total + x;
  const Rational scale = Rational(static_cast<unsigned long>(a.size())) / m.volume;
  return to_rational(total) - scale * m.moment;
}

}  // namespace chowcheck
