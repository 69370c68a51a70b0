#pragma once

// Exact rational arithmetic and dense linear algebra over Q.
//
// Every quantity in the library (volumes, moments, polynomial coefficients,
// residuals) is rational, so nothing here ever rounds. Integers and rationals
// are GMP values; vectors are plain std::vector of them.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowcheck {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Shape mismatch between operands (non-square matrix, wrong vector length).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A consistency check inside the library failed; signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense rectangular matrix of rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(std::vector<RatVector> rows);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::span<const IntVector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const RatVector& row(std::size_t r) const { return rows_[r]; }

  void swap_rows(std::size_t a, std::size_t b) { rows_[a].swap(rows_[b]); }
  RatVector operator*(const RatVector& x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::vector<RatVector> rows_;
  std::size_t cols_ = 0;
};

// --- scalar / vector helpers -------------------------------------------------

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

IntVector make_int_vector(std::initializer_list<long> xs);
RatVector make_rat_vector(std::initializer_list<Rational> xs);
RatVector to_rational(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);  // throws if any entry is fractional

bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);
RatVector zero_rat_vector(std::size_t n);
IntVector zero_int_vector(std::size_t n);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& k, const IntVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& k, const RatVector& v);

// --- linear algebra ----------------------------------------------------------

Rational determinant(const RatMatrix& m);

/// Unique solution of a·x = b, or nullopt when a is singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Some solution of a·x = b for an arbitrary (possibly non-square) system,
/// or nullopt when the system is inconsistent. Free variables are set to 0.
std::optional<RatVector> solve_any(const RatMatrix& a, const RatVector& b);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m·x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m);

/// A vector x ≥ 0 with a·x = b (Phase I simplex, Bland's rule), or nullopt
/// when the system has no nonnegative solution.
std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, const RatVector& b);

// --- lattice primitives ------------------------------------------------------

/// gcd of the entries, always ≥ 0 (0 only for the zero vector).
Integer content(const IntVector& v);

/// v divided by the positive gcd of its entries.
IntVector primitive(const IntVector& v);

/// Clears denominators and divides out the content; orientation preserved.
IntVector primitive_integer_multiple(const RatVector& v);

}  // namespace chowcheck
