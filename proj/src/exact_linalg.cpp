#include "chowcheck/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace chowcheck {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows, RatVector(cols)), cols_(cols) {}

RatMatrix::RatMatrix(std::vector<RatVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionError("RatMatrix: ragged rows");
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  for (const auto& r : rows) {
    RatVector row;
    for (long x : r) row.emplace_back(x);
    rows_.push_back(std::move(row));
  }
  cols_ = rows_.empty() ? 0 : rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionError("RatMatrix: ragged rows");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const IntVector> rows) {
  std::vector<RatVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return RatMatrix(std::move(out));
}

RatVector RatMatrix::operator*(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionError("RatMatrix * vector: length mismatch");
  RatVector y(rows());
  for (std::size_t r = 0; r < rows(); ++r) y[r] = dot(rows_[r], x);
  return y;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

IntVector make_int_vector(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVector make_rat_vector(std::initializer_list<Rational> xs) { return RatVector(xs); }

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw std::domain_error("non-integral coordinate " + to_string(q));
    out.push_back(q.get_num());
  }
  return out;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

RatVector zero_rat_vector(std::size_t n) { return RatVector(n); }
IntVector zero_int_vector(std::size_t n) { return IntVector(n); }

namespace {

template <class A, class B>
void require_same_length(const A& a, const B& b, const char* what) {
  if (a.size() != b.size()) throw DimensionError(std::string(what) + ": length mismatch");
}

}  // namespace

Integer dot(const IntVector& a, const IntVector& b) {
  require_same_length(a, b, "dot");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  require_same_length(a, b, "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  require_same_length(a, b, "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  require_same_length(a, b, "vector +");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  require_same_length(a, b, "vector -");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector operator*(const Integer& k, const IntVector& v) {
  IntVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = k * v[i];
  return c;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_length(a, b, "vector +");
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_length(a, b, "vector -");
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RatVector operator*(const Rational& k, const RatVector& v) {
  RatVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = k * v[i];
  return c;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix is not square");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      a.swap_rows(pivot, col);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::vector<std::size_t> row_reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, row);
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return row_reduce(a).size();
}

std::optional<RatVector> solve_any(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  const std::size_t n = a.cols();
  std::vector<RatVector> aug;
  aug.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    RatVector row = a.row(r);
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  RatMatrix m(std::move(aug));
  if (a.rows() == 0) return RatVector(n);
  const auto pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = nonzero row
  RatVector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, n);
  return x;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (!a.is_square()) throw DimensionError("solve: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  if (rank(a) < a.rows()) return std::nullopt;
  return solve_any(a, b);
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("find_nonnegative_solution: length mismatch");
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  const std::size_t width = k + m;  // originals, then one artificial per row

  // Tableau rows [A | I | b] with b ≥ 0; basis starts at the artificials.
  std::vector<RatVector> t(m, RatVector(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const int sign = b[r] < 0 ? -1 : 1;
    for (std::size_t c = 0; c < k; ++c) t[r][c] = sign * a(r, c);
    t[r][k + r] = 1;
    t[r][width] = sign * b[r];
    basis[r] = k + r;
  }
  // Reduced costs of the Phase I objective (sum of artificials).
  RatVector cost(width + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) cost[c] -= t[r][c];
    cost[width] -= t[r][width];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c < width; ++c) {
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][width] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave == m) throw InternalError("Phase I simplex reported an unbounded direction");

    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t c = 0; c <= width; ++c) t[r][c] -= f * t[leave][c];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t c = 0; c <= width; ++c) cost[c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  if (cost[width] != 0) return std::nullopt;
  RatVector x(k);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < k) x[basis[r]] = t[r][width];
  }
  return x;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector primitive_integer_multiple(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
  }
  return primitive(out);
}

}  // namespace chowcheck
