#include "chowcheck/generators.hpp"

#include <charconv>

namespace chowcheck {

LatticePolytope hirzebruch(long k) {
  if (k < 2) throw UsageError("hirzebruch: k must be at least 2");
  return LatticePolytope::from_points(
      2, {make_int_vector({0, 0}), make_int_vector({0, 1}), make_int_vector({1, 1}), make_int_vector({k, 0})});
}

LatticePolytope standard_simplex(std::size_t n) {
  if (n == 0) throw UsageError("simplex: dimension must be at least 1");
  std::vector<IntVector> pts{zero_int_vector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e = zero_int_vector(n);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return LatticePolytope::from_points(n, std::move(pts));
}

namespace {

// Box with both bounds per coordinate, built from its 2n facets.
LatticePolytope box(std::size_t n, long lo, long hi) {
  HalfspaceRep h{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector up = zero_int_vector(n);
    up[i] = 1;
    h.inequalities.push_back({up, Integer(-lo)});
    IntVector down = zero_int_vector(n);
    down[i] = -1;
    h.inequalities.push_back({down, Integer(hi)});
  }
  return LatticePolytope::from_halfspaces(h);
}

long parse_long(const std::string& name, const std::string& s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(name + ": expected an integer, got '" + s + "'");
  }
  return v;
}

std::size_t parse_dim(const std::string& name, const std::string& s) {
  const long v = parse_long(name, s);
  if (v < 1) throw UsageError(name + ": dimension must be at least 1");
  return static_cast<std::size_t>(v);
}

void expect_args(const std::string& name, const std::vector<std::string>& args, std::size_t count) {
  if (args.size() != count) {
    throw UsageError(name + ": expected " + std::to_string(count) + " argument(s), got " +
                     std::to_string(args.size()));
  }
}

}  // namespace

LatticePolytope unit_cube(std::size_t n) {
  if (n == 0) throw UsageError("cube: dimension must be at least 1");
  return box(n, 0, 1);
}

LatticePolytope cross(std::size_t n) {
  if (n == 0) throw UsageError("cross: dimension must be at least 1");
  return box(n, -1, 1);
}

LatticePolytope cross_polytope(std::size_t n) {
  if (n == 0) throw UsageError("cross-polytope: dimension must be at least 1");
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < n; ++i) {
    for (long s : {1L, -1L}) {
      IntVector e = zero_int_vector(n);
      e[i] = s;
      pts.push_back(std::move(e));
    }
  }
  return LatticePolytope::from_points(n, std::move(pts));
}

LatticePolytope segment(long a, long b) {
  if (a >= b) throw UsageError("segment: need a < b");
  return LatticePolytope::from_points(1, {make_int_vector({a}), make_int_vector({b})});
}

const std::array<std::array<int, 12>, 7>& nill_paffenholz_normals() {
  static const std::array<std::array<int, 12>, 7> m{{
      {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0},
      {0, 0, 0, -1, -1, -1, 0, 0, 0, 2, 1, -1},
  }};
  return m;
}

LatticePolytope nill_paffenholz() {
  const auto& m = nill_paffenholz_normals();
  HalfspaceRep h{7, {}};
  for (std::size_t col = 0; col < 12; ++col) {
    IntVector v(7);
    for (std::size_t row = 0; row < 7; ++row) v[row] = m[row][col];
    h.inequalities.push_back({std::move(v), Integer(1)});
  }
  return LatticePolytope::from_halfspaces(h);
}

LatticePolytope generate(const std::string& name, const std::vector<std::string>& args) {
  if (name == "hirzebruch") {
    expect_args(name, args, 1);
    return hirzebruch(parse_long(name, args[0]));
  }
  if (name == "simplex") {
    expect_args(name, args, 1);
    return standard_simplex(parse_dim(name, args[0]));
  }
  if (name == "cube") {
    expect_args(name, args, 1);
    return unit_cube(parse_dim(name, args[0]));
  }
  if (name == "cross") {
    expect_args(name, args, 1);
    return cross(parse_dim(name, args[0]));
  }
  if (name == "cross-polytope") {
    expect_args(name, args, 1);
    return cross_polytope(parse_dim(name, args[0]));
  }
  if (name == "nill-paffenholz") {
    expect_args(name, args, 0);
    return nill_paffenholz();
  }
  if (name == "segment") {
    expect_args(name, args, 2);
    return segment(parse_long(name, args[0]), parse_long(name, args[1]));
  }
  throw UsageError("unknown generator '" + name +
                   "' (expected hirzebruch, simplex, cube, cross, cross-polytope, nill-paffenholz, segment)");
}

std::string generator_id(const std::string& name, const std::vector<std::string>& args) {
  std::string id = name;
  for (const auto& a : args) id += " " + a;
  return id;
}

}  // namespace chowcheck
