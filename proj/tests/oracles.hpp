#pragma once

// Reference implementations for tests. None of them reuse the library
// routine they are compared against.

#include "chowcheck/exact_linalg.hpp"
#include "chowcheck/lattice_points.hpp"
#include "chowcheck/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace chowcheck::oracle {

// Lattice points of level·P by testing every point of the integer bounding
// box against the halfspace description.
inline DilationData box_count_and_sum(const LatticePolytope& p, long level) {
  const std::size_t n = p.dim();
  std::vector<long> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = hi[c] = p.vertices().front()[c].get_si() * level;
    for (const auto& v : p.vertices()) {
      lo[c] = std::min(lo[c], v[c].get_si() * level);
      hi[c] = std::max(hi[c], v[c].get_si() * level);
    }
  }
  DilationData out{level, Integer(0), IntVector(n)};
  std::vector<long> x = lo;
  for (;;) {
    bool inside = true;
    for (const auto& f : p.facets().inequalities) {
      Integer s = f.offset * level;
      for (std::size_t c = 0; c < n; ++c) s += f.normal[c] * x[c];
      if (s < 0) {
        inside = false;
        break;
      }
    }
    if (inside) {
      ++out.count;
      for (std::size_t c = 0; c < n; ++c) out.coordinate_sum[c] += x[c];
    }
    std::size_t c = 0;
    while (c < n && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == n) break;
    ++x[c];
  }
  return out;
}

inline std::vector<IntVector> box_points(const LatticePolytope& p, long level) {
  std::vector<IntVector> pts;
  const std::size_t n = p.dim();
  std::vector<long> lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    lo[c] = hi[c] = p.vertices().front()[c].get_si() * level;
    for (const auto& v : p.vertices()) {
      lo[c] = std::min(lo[c], v[c].get_si() * level);
      hi[c] = std::max(hi[c], v[c].get_si() * level);
    }
  }
  std::vector<long> x = lo;
  for (;;) {
    IntVector point(x.begin(), x.end());
    bool inside = true;
    for (const auto& f : p.facets().inequalities) {
      if (f.slack(point) + f.offset * (level - 1) < 0) inside = false;
    }
    if (inside) pts.push_back(point);
    std::size_t c = 0;
    while (c < n && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == n) break;
    ++x[c];
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

// 0 ∈ conv(W) iff 0 is a nonnegative barycentric combination of some
// affinely independent subset of at most m+1 weights (Carathéodory).
inline bool origin_in_hull_bruteforce(const std::vector<IntVector>& weights) {
  const std::size_t m = weights.front().size();
  const std::size_t k = weights.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (1u << j)) idx.push_back(j);
    }
    if (idx.size() > m + 1) continue;
    std::vector<IntVector> subset;
    for (auto j : idx) subset.push_back(weights[j]);
    if (affine_dimension(subset) != static_cast<long>(idx.size()) - 1) continue;
    RatMatrix a(m + 1, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (std::size_t r = 0; r < m; ++r) a(r, c) = weights[idx[c]][r];
      a(m, c) = 1;
    }
    RatVector b(m + 1);
    b[m] = 1;
    const auto lambda = solve_any(a, b);
    if (!lambda) continue;
    if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& q) { return q >= 0; })) return true;
  }
  return false;
}

// Random integral polytope: hull of `count` random points in [lo, hi]^dim,
// retried until full-dimensional.
inline LatticePolytope random_polytope(std::mt19937& rng, std::size_t dim, std::size_t count, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  for (;;) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < count; ++i) {
      IntVector p(dim);
      for (auto& x : p) x = coord(rng);
      pts.push_back(std::move(p));
    }
    if (affine_dimension(pts) == static_cast<long>(dim)) return LatticePolytope::from_points(dim, std::move(pts));
  }
}

// Product of random elementary integer matrices (determinant ±1).
inline std::vector<IntVector> random_unimodular(std::mt19937& rng, std::size_t n) {
  std::vector<IntVector> m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    if (a == b) {
      for (auto& x : m[a]) x = -x;
      continue;
    }
    const long k = mult(rng);
    for (std::size_t c = 0; c < n; ++c) m[a][c] += k * m[b][c];
  }
  return m;
}

// Closed forms for Δ_k = conv{(0,0),(0,1),(1,1),(k,0)}.
namespace hirzebruch_data {

inline Rational frac(long a, long b) { return Rational(a) / Rational(b); }

inline Rational volume(long k) { return frac(k + 1, 2); }

inline RatVector moment(long k) {
  return {frac(k * k + k + 1, 6), frac(k + 2, 6)};
}

inline Integer count(long k, long i) {
  return Integer(((k + 1) * i * i + (k + 3) * i + 2) / 2);
}

inline RatVector sum(long k, long i) {
  const Rational t(i);
  return {t / 12 * (2 * (k * k + k + 1) * t * t + 3 * (k * k + k + 2) * t + (k * k + k + 4)),
          t / 12 * (2 * (k + 2) * t * t + 12 * t + (8 - 2 * k))};
}

inline RatVector residual(long k, long i) {
  const Rational c = frac(i * (i + 1) * k * (k - 1), 24);
  return {c * (k - 1), c * -2};
}

inline RatVector obstruction_vector(long k) {
  const Rational c = frac(k * (k - 1), 24);
  return {c * (k - 1), c * -2};
}

}  // namespace hirzebruch_data

}  // namespace chowcheck::oracle
