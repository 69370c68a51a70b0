#include "chowcheck/ehrhart.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace chowcheck {

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {}

Rational EhrhartPolynomial::coefficient(std::size_t j) const {
  return j < coefficients_.size() ? coefficients_[j] : Rational(0);
}

Rational EhrhartPolynomial::operator()(const Rational& t) const {
  Rational v = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) v = v * t + *it;
  return v;
}

SumPolynomial::SumPolynomial(std::size_t dim, std::vector<RatVector> coefficients)
    : dim_(dim), coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (c.size() != dim_) throw DimensionError("SumPolynomial: coefficient has wrong length");
  }
}

RatVector SumPolynomial::coefficient(std::size_t j) const {
  if (j == 0 || j > coefficients_.size()) return RatVector(dim_);
  return coefficients_[j - 1];
}

RatVector SumPolynomial::operator()(const Rational& t) const {
  RatVector v(dim_);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) v = t * v + *it;
  return t * v;
}

std::vector<Rational> interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                  std::size_t lowest_degree) {
  if (nodes.size() != values.size()) throw DimensionError("interpolate: nodes and values differ in length");
  const std::size_t m = nodes.size();
  RatMatrix vandermonde(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    Rational power = 1;
    for (std::size_t j = 0; j < lowest_degree; ++j) power *= nodes[r];
    for (std::size_t c = 0; c < m; ++c) {
      vandermonde(r, c) = power;
      power *= nodes[r];
    }
  }
  auto coefficients = solve(vandermonde, values);
  if (!coefficients) throw std::invalid_argument("interpolate: nodes are not distinct (or zero with a gap)");
  return *coefficients;
}

namespace {

std::map<long, const DilationData*> index_levels(const std::vector<DilationData>& data) {
  std::map<long, const DilationData*> by_level;
  for (const auto& d : data) by_level[d.level] = &d;
  return by_level;
}

const DilationData& require_level(const std::map<long, const DilationData*>& by_level, long level) {
  auto it = by_level.find(level);
  if (it == by_level.end()) {
    throw std::invalid_argument("missing enumeration data for level " + std::to_string(level));
  }
  return *it->second;
}

std::vector<long> range_levels(long first, long last) {
  std::vector<long> levels;
  for (long i = first; i <= last; ++i) levels.push_back(i);
  return levels;
}

SumPolynomial sum_through(std::size_t dim, const std::vector<Rational>& nodes,
                          const std::vector<const DilationData*>& data) {
  std::vector<RatVector> coefficients(nodes.size(), RatVector(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Rational> values;
    for (const auto* d : data) values.emplace_back(d->coordinate_sum[c]);
    const auto coeff = interpolate(nodes, values, 1);
    for (std::size_t j = 0; j < nodes.size(); ++j) coefficients[j][c] = coeff[j];
  }
  return SumPolynomial(dim, std::move(coefficients));
}

}  // namespace

EhrhartPolynomial ehrhart_from_data(std::size_t dim, const std::vector<DilationData>& data) {
  const auto by_level = index_levels(data);
  std::vector<Rational> nodes{Rational(0)};
  std::vector<Rational> values{Rational(1)};
  for (long i = 1; i <= static_cast<long>(dim); ++i) {
    nodes.emplace_back(i);
    values.emplace_back(require_level(by_level, i).count);
  }
  return EhrhartPolynomial(interpolate(nodes, values));
}

SumPolynomial sum_from_data(std::size_t dim, const std::vector<DilationData>& data) {
  const auto by_level = index_levels(data);
  std::vector<Rational> nodes;
  std::vector<const DilationData*> rows;
  for (long i = 1; i <= static_cast<long>(dim) + 1; ++i) {
    nodes.emplace_back(i);
    rows.push_back(&require_level(by_level, i));
  }
  return sum_through(dim, nodes, rows);
}

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p, unsigned jobs) {
  return ehrhart_from_data(p.dim(), count_and_sum_levels(p, range_levels(1, static_cast<long>(p.dim())), jobs));
}

SumPolynomial sum_polynomial(const LatticePolytope& p, unsigned jobs) {
  return sum_from_data(p.dim(), count_and_sum_levels(p, range_levels(1, static_cast<long>(p.dim()) + 1), jobs));
}

EhrhartPolynomial ehrhart_polynomial_at_levels(const LatticePolytope& p, const std::vector<long>& levels) {
  if (levels.size() != p.dim()) throw std::invalid_argument("need exactly dim levels besides E(0) = 1");
  const auto data = count_and_sum_levels(p, levels);
  std::vector<Rational> nodes{Rational(0)};
  std::vector<Rational> values{Rational(1)};
  for (const auto& d : data) {
    nodes.emplace_back(d.level);
    values.emplace_back(d.count);
  }
  return EhrhartPolynomial(interpolate(nodes, values));
}

SumPolynomial sum_polynomial_at_levels(const LatticePolytope& p, const std::vector<long>& levels) {
  if (levels.size() != p.dim() + 1) throw std::invalid_argument("need exactly dim + 1 levels");
  const auto data = count_and_sum_levels(p, levels);
  std::vector<Rational> nodes;
  std::vector<const DilationData*> rows;
  for (const auto& d : data) {
    nodes.emplace_back(d.level);
    rows.push_back(&d);
  }
  return sum_through(p.dim(), nodes, rows);
}

ClosedForms polygon_closed_forms(const LatticePolytope& p) {
  if (p.dim() != 2) throw DimensionError("polygon closed forms need a 2-dimensional polytope");
  const MeasureData m = measure(p);
  const LatticePointEnumerator e(p);
  const DilationData d1 = e.count_and_sum(1);
  const DilationData d2 = e.count_and_sum(2);
  const Rational& vol = m.volume;
  const Rational e1(d1.count);
  const Rational e2(d2.count);

  EhrhartPolynomial ehrhart({2 * e1 - e2 + 2 * vol, e2 - e1 - 3 * vol, vol});

  const RatVector s1 = to_rational(d1.coordinate_sum);
  const RatVector s2 = to_rational(d2.coordinate_sum);
  const RatVector& mu = m.moment;
  const Rational half(1, 2);
  RatVector linear = half * (Rational(4) * s1 - s2 + Rational(4) * mu);
  RatVector quadratic = half * (s2 - Rational(2) * s1 - Rational(6) * mu);
  SumPolynomial sum(2, {std::move(linear), std::move(quadratic), mu});
  return {std::move(ehrhart), std::move(sum)};
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& m : mismatches) {
    os << "level " << m.level << ": count residual " << to_string(m.count_residual) << ", sum residual (";
    for (std::size_t c = 0; c < m.sum_residual.size(); ++c) {
      os << (c ? ", " : "") << to_string(m.sum_residual[c]);
    }
    os << ")\n";
  }
  return os.str();
}

ValidationReport validate(const EhrhartPolynomial& e, const SumPolynomial& s, const LatticePolytope& p,
                          long extra_levels, unsigned jobs) {
  if (extra_levels < 1) throw std::invalid_argument("validate: extra_levels must be at least 1");
  const long first = static_cast<long>(p.dim()) + 2;
  ValidationReport report;
  for (const auto& d : count_and_sum_levels(p, range_levels(first, first + extra_levels - 1), jobs)) {
    const Rational t(d.level);
    const Rational count_residual = e(t) - Rational(d.count);
    const RatVector sum_residual = s(t) - to_rational(d.coordinate_sum);
    if (count_residual != 0 || !is_zero(sum_residual)) {
      report.mismatches.push_back({d.level, count_residual, sum_residual});
    }
  }
  return report;
}

bool reciprocity_holds(const EhrhartPolynomial& e, const LatticePolytope& p) {
  Rational value = e(Rational(-1));
  if (p.dim() % 2 == 1) value = -value;
  return value == Rational(interior_point_count(p));
}

}  // namespace chowcheck
