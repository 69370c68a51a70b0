#include "chowcheck/hilbert.hpp"

#include "chowcheck/delzant.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowcheck {

std::vector<IntVector> cone_slice(const LatticePolytope& p, long i) {
  if (i < 0) throw std::invalid_argument("cone_slice: height must be nonnegative");
  if (i == 0) return {zero_int_vector(p.dim() + 1)};
  std::vector<IntVector> slice = enumerate(p, i);
  for (auto& a : slice) a.emplace_back(i);
  return slice;
}

HilbertTruncation derivative_series(const LatticePolytope& p, long order, unsigned jobs) {
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  const MeasureData m = measure(p);
  std::vector<long> levels;
  for (long i = 1; i <= order; ++i) levels.push_back(i);

  HilbertTruncation t;
  t.order = order;
  t.per_degree = count_and_sum_levels(p, levels, jobs);
  for (const auto& d : t.per_degree) {
    t.derivative_series.push_back(to_rational(d.coordinate_sum));
    const Rational weight = Rational(d.level) * Rational(d.count) / m.volume;
    t.expected_series.push_back(weight * m.moment);
  }
  return t;
}

SeriesCheck semistable_series_check(const HilbertTruncation& t, const MeasureData& m, bool reflexive) {
  SeriesCheck check;
  check.reflexive = reflexive;
  for (std::size_t k = 0; k < t.per_degree.size(); ++k) {
    const long degree = t.per_degree[k].level;
    const Rational weight = Rational(degree) * Rational(t.per_degree[k].count) / m.volume;
    if (t.derivative_series[k] != weight * m.moment) check.failing_degrees.push_back(degree);
    if (reflexive && !is_zero(t.derivative_series[k])) check.nonzero_derivative_degrees.push_back(degree);
  }
  std::vector<long> all = check.failing_degrees;
  all.insert(all.end(), check.nonzero_derivative_degrees.begin(), check.nonzero_derivative_degrees.end());
  if (!all.empty()) {
    check.passes = false;
    check.first_failing_degree = *std::min_element(all.begin(), all.end());
  }
  return check;
}

SeriesCheck semistable_series_check(const LatticePolytope& p, long order, unsigned jobs) {
  return semistable_series_check(derivative_series(p, order, jobs), measure(p), is_reflexive(p));
}

}  // namespace chowcheck
