#include "chowcheck/measure.hpp"

namespace chowcheck {

MeasureData measure(const LatticePolytope& p, ApexRule rule) {
  const std::size_t n = p.dim();
  MeasureData m{Rational(0), RatVector(n), RatVector(n)};
  for (const auto& cell : triangulate(p, rule)) {
    const Rational vol = cell.volume();
    m.volume += vol;
    IntVector vertex_sum = zero_int_vector(n);
    for (const auto& v : cell.vertices) vertex_sum = vertex_sum + v;
    const Rational weight = vol / static_cast<unsigned long>(n + 1);
    for (std::size_t c = 0; c < n; ++c) m.moment[c] += weight * Rational(vertex_sum[c]);
  }
  if (m.volume <= 0) throw InternalError("triangulation produced a non-positive volume");
  m.barycenter = (Rational(1) / m.volume) * m.moment;
  return m;
}

Rational volume(const LatticePolytope& p) { return measure(p).volume; }

RatVector moment(const LatticePolytope& p) { return measure(p).moment; }

}  // namespace chowcheck
