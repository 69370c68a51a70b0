#include "chowcheck/lattice_points.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace chowcheck {

namespace {

using i128 = __int128;

// --- integer backends ----------------------------------------------------------

inline std::int64_t div_floor(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t div_ceil(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Integer div_floor(const Integer& a, const Integer& b) { return floor_div(a, b); }
inline Integer div_ceil(const Integer& a, const Integer& b) { return ceil_div(a, b); }

template <class Int>
Int narrow(const Integer& z);

template <>
std::int64_t narrow<std::int64_t>(const Integer& z) {
  return z.get_si();
}

template <>
Integer narrow<Integer>(const Integer& z) {
  return z;
}

Integer widen(std::int64_t x) { return Integer(static_cast<long>(x)); }
Integer widen(const Integer& x) { return x; }

Integer widen(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer z = (hi << 64) + lo;
  return neg ? Integer(-z) : z;
}

template <class Acc, class Int>
Acc acc(const Int& x) {
  if constexpr (std::is_same_v<Acc, i128>) {
    return static_cast<i128>(x);
  } else {
    return Acc(x);
  }
}

// One enumeration stage: rows of the projection onto coordinates 0..k whose
// coefficient on coordinate k is nonzero (the others are implied by earlier
// stages).
template <class Int>
struct Stage {
  std::size_t rows = 0;
  std::size_t width = 0;       // k + 1
  std::vector<Int> coef;       // rows × width
  std::vector<Int> constant;   // offset · level
};

template <class Int, class Acc>
class Walker {
 public:
  Walker(const std::vector<HalfspaceRep>& chain, long level) : n_(chain.size()) {
    const Integer lvl(level);
    for (std::size_t k = 0; k < n_; ++k) {
      Stage<Int> s;
      s.width = k + 1;
      for (const auto& f : chain[k].inequalities) {
        if (f.normal[k] == 0) continue;
        for (const auto& a : f.normal) s.coef.push_back(narrow<Int>(a));
        s.constant.push_back(narrow<Int>(f.offset * lvl));
        ++s.rows;
      }
      stages_.push_back(std::move(s));
    }
    x_.resize(n_);
    partial_.resize(n_);
    base_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      partial_[k].resize(stages_[k].rows);
      base_[k].resize(stages_[k].rows);
    }
    partial_[0] = stages_[0].constant;
    sum_.assign(n_, Acc(0));
  }

  // Aggregates over the share of the walk selected by residue (mod stride):
  // slices x_0 for dim ≤ 2, otherwise the x_1 sub-slices numbered in walk
  // order, which balances better when x_0 takes few values.
  void aggregate(unsigned residue, unsigned stride) {
    Int lo{}, hi{};
    if (!range(0, lo, hi)) return;
    if (n_ == 1) {
      if (residue == 0) leaf(lo, hi);
      return;
    }
    prepare_children(0);
    if (n_ == 2) {
      const Int step = static_cast<Int>(stride);
      for (Int v = lo + static_cast<Int>(residue); v <= hi; v += step) visit_value(0, v);
      return;
    }
    std::size_t ticket = 0;
    for (Int v = lo; v <= hi; ++v) {
      set_value(0, v);
      Int lo1{}, hi1{};
      if (!range(1, lo1, hi1)) continue;
      prepare_children(1);
      for (Int w = lo1; w <= hi1; ++w) {
        if (ticket++ % stride == residue) visit_value(1, w);
      }
    }
  }

  template <class Fn>
  void each_point(Fn&& fn) {
    point_fn_ = [&](const std::vector<Int>& x) { fn(x); };
    Int lo{}, hi{};
    if (!range(0, lo, hi)) return;
    walk_points(0, lo, hi);
  }

  const Acc& count() const { return count_; }
  const std::vector<Acc>& sum() const { return sum_; }

 private:
  // Feasible interval for coordinate k given x_0..x_{k-1} (already folded
  // into partial_[k]); false when empty.
  bool range(std::size_t k, Int& lo, Int& hi) const {
    const Stage<Int>& s = stages_[k];
    bool has_lo = false;
    bool has_hi = false;
    for (std::size_t r = 0; r < s.rows; ++r) {
      const Int& lead = s.coef[r * s.width + k];
      const Int rhs = -partial_[k][r];
      if (lead > 0) {
        Int b = div_ceil(rhs, lead);
        if (!has_lo || b > lo) lo = b;
        has_lo = true;
      } else {
        Int b = div_floor(rhs, lead);
        if (!has_hi || b < hi) hi = b;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) throw InternalError("projection stage is unbounded");
    return lo <= hi;
  }

  // base_[k+1][r] = constant + sum_{j<k} coef_j x_j for the rows of stage k+1.
  void prepare_children(std::size_t k) {
    const Stage<Int>& s = stages_[k + 1];
    for (std::size_t r = 0; r < s.rows; ++r) {
      Int b = s.constant[r];
      for (std::size_t j = 0; j < k; ++j) b += s.coef[r * s.width + j] * x_[j];
      base_[k + 1][r] = b;
    }
  }

  void set_value(std::size_t k, const Int& v) {
    x_[k] = v;
    const Stage<Int>& s = stages_[k + 1];
    for (std::size_t r = 0; r < s.rows; ++r) partial_[k + 1][r] = base_[k + 1][r] + s.coef[r * s.width + k] * v;
  }

  void visit_value(std::size_t k, const Int& v) {
    set_value(k, v);
    Int lo{}, hi{};
    if (!range(k + 1, lo, hi)) return;
    if (k + 2 == n_) {
      leaf(lo, hi);
      return;
    }
    prepare_children(k + 1);
    for (Int w = lo; w <= hi; ++w) visit_value(k + 1, w);
  }

  // Innermost coordinate runs over [lo, hi] with the prefix fixed.
  void leaf(const Int& lo, const Int& hi) {
    const Acc cnt = acc<Acc>(Int(hi - lo + 1));
    count_ += cnt;
    for (std::size_t j = 0; j + 1 < n_; ++j) sum_[j] += acc<Acc>(x_[j]) * cnt;
    sum_[n_ - 1] += (acc<Acc>(lo) + acc<Acc>(hi)) * cnt / 2;
  }

  void walk_points(std::size_t k, const Int& lo, const Int& hi) {
    for (Int v = lo; v <= hi; ++v) {
      if (k + 1 == n_) {
        x_[k] = v;
        point_fn_(x_);
        continue;
      }
      if (k == 0) prepare_children(0);
      set_value(k, v);
      Int clo{}, chi{};
      if (!range(k + 1, clo, chi)) continue;
      if (k + 2 < n_) prepare_children(k + 1);
      walk_points(k + 1, clo, chi);
    }
  }

  std::size_t n_;
  std::vector<Stage<Int>> stages_;
  std::vector<Int> x_;
  std::vector<std::vector<Int>> partial_;
  std::vector<std::vector<Int>> base_;
  Acc count_ = Acc(0);
  std::vector<Acc> sum_;
  std::function<void(const std::vector<Int>&)> point_fn_;
};

// Projection of the permuted polytope onto its first k coordinates, from the
// description over k+1 coordinates: Fourier-Motzkin on coordinate k, then
// pruned to facets of the projected vertex set.
HalfspaceRep eliminate_last(const HalfspaceRep& h, const std::vector<IntVector>& projected_vertices) {
  const std::size_t k = h.dim - 1;
  std::vector<Inequality> candidates;
  std::vector<const Inequality*> pos, neg;
  for (const auto& f : h.inequalities) {
    const int s = sgn(f.normal[k]);
    if (s == 0) {
      candidates.push_back({IntVector(f.normal.begin(), f.normal.begin() + static_cast<long>(k)), f.offset});
    } else {
      (s > 0 ? pos : neg).push_back(&f);
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      const Integer a = -q->normal[k];
      const Integer b = p->normal[k];
      Inequality c{IntVector(k), a * p->offset + b * q->offset};
      for (std::size_t j = 0; j < k; ++j) c.normal[j] = a * p->normal[j] + b * q->normal[j];
      if (content(c.normal) == 0) continue;
      candidates.push_back(std::move(c));
    }
  }
  return supporting_facets(k, projected_vertices, candidates);
}

bool fits_fast_path(const std::vector<HalfspaceRep>& chain, const Integer& max_coord, long level) {
  // Every partial dot product must stay well inside int64, and count·coordinate
  // inside int128.
  const Integer bound = Integer(1) << 60;
  const Integer box = max_coord * level + 1;
  for (const auto& h : chain) {
    for (const auto& f : h.inequalities) {
      Integer s = abs(f.offset) * level;
      for (const auto& a : f.normal) s += abs(a) * box;
      if (s >= bound) return false;
    }
  }
  const std::size_t n = chain.size();
  Integer total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 2 * box + 1;
  return total * box < (Integer(1) << 120);
}

template <class Int, class Acc>
void aggregate_into(const std::vector<HalfspaceRep>& chain, const std::vector<std::size_t>& order, long level,
                    unsigned jobs, DilationData& out) {
  std::vector<Walker<Int, Acc>> walkers;
  walkers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) walkers.emplace_back(chain, level);
  if (jobs == 1) {
    walkers[0].aggregate(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) {
      threads.emplace_back([&walkers, j, jobs] { walkers[j].aggregate(j, jobs); });
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& w : walkers) {
    out.count += widen(w.count());
    for (std::size_t k = 0; k < order.size(); ++k) out.coordinate_sum[order[k]] += widen(w.sum()[k]);
  }
}

}  // namespace

LatticePointEnumerator::LatticePointEnumerator(const LatticePolytope& p, CoordinateOrder order) : dim_(p.dim()) {
  const std::size_t n = p.dim();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::vector<Integer> width(n);
  max_abs_vertex_coordinate_ = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Integer lo = p.vertices().front()[c];
    Integer hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
      max_abs_vertex_coordinate_ = std::max(max_abs_vertex_coordinate_, Integer(abs(v[c])));
    }
    width[c] = hi - lo;
  }
  if (order == CoordinateOrder::WidestInnermost) {
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return width[a] < width[b]; });
  }

  auto permute = [&](const IntVector& v, std::size_t len) {
    IntVector out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = v[order_[k]];
    return out;
  };

  chain_.resize(n);
  chain_[n - 1].dim = n;
  for (const auto& f : p.facets().inequalities) chain_[n - 1].inequalities.push_back({permute(f.normal, n), f.offset});
  for (std::size_t k = n - 1; k > 0; --k) {
    std::set<IntVector> projected;
    for (const auto& v : p.vertices()) projected.insert(permute(v, k));
    chain_[k - 1] = eliminate_last(chain_[k], {projected.begin(), projected.end()});
  }
}

DilationData LatticePointEnumerator::count_and_sum(long level, unsigned jobs) const {
  if (level < 1) throw std::invalid_argument("dilation level must be positive");
  jobs = std::max(1u, jobs);

  DilationData out{level, Integer(0), IntVector(dim_)};
  if (fits_fast_path(chain_, max_abs_vertex_coordinate_, level)) {
    aggregate_into<std::int64_t, i128>(chain_, order_, level, jobs, out);
  } else {
    aggregate_into<Integer, Integer>(chain_, order_, level, jobs, out);
  }
  return out;
}

void LatticePointEnumerator::for_each_point(long level, const std::function<void(const IntVector&)>& visit) const {
  if (level < 1) throw std::invalid_argument("dilation level must be positive");
  IntVector point(dim_);
  auto emit = [&](const auto& x) {
    for (std::size_t k = 0; k < dim_; ++k) point[order_[k]] = widen(x[k]);
    visit(point);
  };
  if (fits_fast_path(chain_, max_abs_vertex_coordinate_, level)) {
    Walker<std::int64_t, i128> w(chain_, level);
    w.each_point(emit);
  } else {
    Walker<Integer, Integer> w(chain_, level);
    w.each_point(emit);
  }
}

std::vector<IntVector> enumerate(const LatticePolytope& p, long level) {
  std::vector<IntVector> points;
  LatticePointEnumerator(p, CoordinateOrder::Natural).for_each_point(level, [&](const IntVector& x) {
    points.push_back(x);
  });
  return points;
}

DilationData count_and_sum(const LatticePolytope& p, long level, unsigned jobs) {
  return LatticePointEnumerator(p).count_and_sum(level, jobs);
}

std::vector<DilationData> count_and_sum_levels(const LatticePolytope& p, const std::vector<long>& levels,
                                               unsigned jobs) {
  const LatticePointEnumerator e(p);
  std::vector<DilationData> out;
  out.reserve(levels.size());
  for (long level : levels) out.push_back(e.count_and_sum(level, jobs));
  return out;
}

Integer interior_point_count(const LatticePolytope& p) {
  Integer count = 0;
  LatticePointEnumerator(p).for_each_point(1, [&](const IntVector& x) {
    if (contains_strictly(p.facets(), to_rational(x))) ++count;
  });
  return count;
}

}  // namespace chowcheck
