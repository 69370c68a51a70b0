#include "chowcheck/generators.hpp"
#include "chowcheck/polytope.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace chowcheck;

namespace {

Inequality ineq(std::initializer_list<long> normal, long offset) {
  return {make_int_vector(normal), Integer(offset)};
}

std::set<Inequality> as_set(const HalfspaceRep& h) { return {h.inequalities.begin(), h.inequalities.end()}; }

const LatticePolytope& delta2() {
  static const LatticePolytope p = hirzebruch(2);
  return p;
}

}  // namespace

TEST_CASE("vrep_to_hrep") {
  const auto square = unit_cube(2);
  CHECK(as_set(vrep_to_hrep(square)) ==
        std::set<Inequality>{ineq({1, 0}, 0), ineq({0, 1}, 0), ineq({-1, 0}, 1), ineq({0, -1}, 1)});

  CHECK(as_set(vrep_to_hrep(1, {make_int_vector({-1}), make_int_vector({1})})) ==
        std::set<Inequality>{ineq({1}, 1), ineq({-1}, 1)});

  // Hand hull of {(0,0),(0,1),(1,1),(2,0)}.
  CHECK(as_set(vrep_to_hrep(delta2())) ==
        std::set<Inequality>{ineq({0, 1}, 0), ineq({1, 0}, 0), ineq({0, -1}, 1), ineq({-1, -1}, 2)});

  CHECK_THROWS_AS(vrep_to_hrep(2, {make_int_vector({0, 0}), make_int_vector({1, 1}), make_int_vector({2, 2})}),
                  GeometryError);
}

TEST_CASE("from_points drops non-extreme points") {
  const auto p = LatticePolytope::from_points(
      2, {make_int_vector({0, 0}), make_int_vector({2, 0}), make_int_vector({0, 2}), make_int_vector({1, 0}),
          make_int_vector({1, 1}), make_int_vector({0, 1})});
  CHECK(p.vertices() == std::vector<IntVector>{make_int_vector({0, 0}), make_int_vector({0, 2}),
                                                make_int_vector({2, 0})});
}

TEST_CASE("hrep_to_vrep") {
  const auto simplex = hrep_to_vrep(HalfspaceRep{2, {ineq({1, 0}, 0), ineq({0, 1}, 0), ineq({-1, -1}, 1)}});
  CHECK(simplex.vertices() == std::vector<IntVector>{make_int_vector({0, 0}), make_int_vector({0, 1}),
                                                      make_int_vector({1, 0})});

  HalfspaceRep cube{3, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (long s : {1L, -1L}) {
      IntVector n = zero_int_vector(3);
      n[i] = s;
      cube.inequalities.push_back({n, Integer(1)});
    }
  }
  const auto c = hrep_to_vrep(cube);
  CHECK(c.vertices().size() == 8);
  for (const auto& v : c.vertices()) {
    for (const auto& x : v) CHECK(abs(x) == 1);
  }

  // Redundant inequality is discarded.
  const auto r = hrep_to_vrep(HalfspaceRep{2, {ineq({1, 0}, 0), ineq({0, 1}, 0), ineq({-1, -1}, 1), ineq({-1, 0}, 5)}});
  CHECK(r.facets().inequalities.size() == 3);
}

TEST_CASE("hrep_to_vrep diagnostics") {
  // Unbounded quadrant.
  CHECK_THROWS_WITH_AS(hrep_to_vrep(HalfspaceRep{2, {ineq({1, 0}, 0), ineq({0, 1}, 0)}}),
                       doctest::Contains("unbounded"), GeometryError);
  // Strip: normals do not span.
  CHECK_THROWS_AS(hrep_to_vrep(HalfspaceRep{2, {ineq({1, 0}, 0), ineq({-1, 0}, 1)}}), GeometryError);
  // Empty.
  CHECK_THROWS_WITH_AS(hrep_to_vrep(HalfspaceRep{1, {ineq({1}, -2), ineq({-1}, 1)}}), doctest::Contains("empty"),
                       GeometryError);
  // Lower-dimensional (a single point).
  CHECK_THROWS_AS(hrep_to_vrep(HalfspaceRep{1, {ineq({1}, 0), ineq({-1}, 0)}}), GeometryError);
  // Non-integral vertex: 2x ≤ 1.
  CHECK_THROWS_WITH_AS(hrep_to_vrep(HalfspaceRep{1, {ineq({1}, 0), ineq({-2}, 1)}}),
                       doctest::Contains("non-integral"), GeometryError);
}

TEST_CASE("nill-paffenholz vertices are integral") {
  // Brute force over all C(12,7) subsets (done independently once): 64
  // vertices, all integral, coordinate ranges [-1,2]^3 x [-1,5]^3 x [-1,1].
  const auto np = nill_paffenholz();
  CHECK(np.dim() == 7);
  CHECK(np.facets().inequalities.size() == 12);
  CHECK(np.vertices().size() == 64);
  const long lo[] = {-1, -1, -1, -1, -1, -1, -1};
  const long hi[] = {2, 2, 2, 5, 5, 5, 1};
  for (std::size_t c = 0; c < 7; ++c) {
    Integer mn = np.vertices().front()[c], mx = mn;
    for (const auto& v : np.vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    CHECK(mn == lo[c]);
    CHECK(mx == hi[c]);
  }
}

TEST_CASE("contains") {
  const auto square = unit_cube(2);
  const auto& h = square.facets();
  CHECK(contains(h, make_rat_vector({Rational(1, 2), Rational(1, 2)})));
  CHECK(contains(h, make_rat_vector({1, 0})));
  CHECK_FALSE(contains(h, make_rat_vector({2, 0})));
  CHECK_FALSE(contains_strictly(h, make_rat_vector({1, 0})));
}

TEST_CASE("dilate") {
  CHECK(dilate(standard_simplex(2), 2).vertices() ==
        std::vector<IntVector>{make_int_vector({0, 0}), make_int_vector({0, 2}), make_int_vector({2, 0})});
  CHECK(dilate(delta2(), 1) == delta2());
  CHECK(dilate(segment(0, 1), 5) == segment(0, 5));
  CHECK_THROWS(dilate(delta2(), 0));
  CHECK(dilate(dilate(delta2(), 2), 3) == dilate(delta2(), 6));
  std::vector<IntVector> tripled;
  for (const auto& x : delta2().vertices()) tripled.push_back(Integer(3) * x);
  CHECK(dilate(delta2(), 3) == LatticePolytope::from_points(2, tripled));
}

TEST_CASE("translate") {
  CHECK(translate(unit_cube(2), make_int_vector({3, -1})).vertices() ==
        std::vector<IntVector>{make_int_vector({3, -1}), make_int_vector({3, 0}), make_int_vector({4, -1}),
                               make_int_vector({4, 0})});
  CHECK(translate(delta2(), make_int_vector({0, 0})) == delta2());
  const auto moved = translate(standard_simplex(2), make_int_vector({-1, -1}));
  CHECK(moved.vertices() == std::vector<IntVector>{make_int_vector({-1, -1}), make_int_vector({-1, 0}),
                                                    make_int_vector({0, -1})});
  // Offsets are adjusted consistently with recomputing the hull.
  CHECK(moved == LatticePolytope::from_points(2, moved.vertices()));
}

TEST_CASE("vertex edge directions") {
  const auto square = unit_cube(2);
  CHECK(vertex_edge_directions(square, 0) == std::vector<IntVector>{make_int_vector({0, 1}), make_int_vector({1, 0})});

  const auto& p = delta2();
  auto index_of = [&](std::initializer_list<long> v) {
    const auto target = make_int_vector(v);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      if (p.vertices()[i] == target) return i;
    }
    FAIL("vertex not found");
    return std::size_t{0};
  };
  CHECK(vertex_edge_directions(p, index_of({2, 0})) ==
        std::vector<IntVector>{make_int_vector({-1, 0}), make_int_vector({-1, 1})});
  CHECK(vertex_edge_directions(p, index_of({1, 1})) ==
        std::vector<IntVector>{make_int_vector({-1, 0}), make_int_vector({1, -1})});

  // Octahedron: every vertex has 4 edges.
  const auto oct = cross_polytope(3);
  for (std::size_t v = 0; v < oct.vertices().size(); ++v) CHECK(vertex_edge_directions(oct, v).size() == 4);
}

TEST_CASE("triangulate") {
  CHECK(triangulate(standard_simplex(3)).size() == 1);
  CHECK(triangulate(unit_cube(2)).size() == 2);
  const auto cells = triangulate(delta2());
  CHECK(cells.size() == 2);
  Rational total = 0;
  for (const auto& c : cells) total += c.volume();
  CHECK(total == Rational(3, 2));
}

TEST_CASE("property: vertex/halfspace round trip on random polytopes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const auto p = oracle::random_polytope(rng, dim, 7, -4, 4);
    const auto q = hrep_to_vrep(vrep_to_hrep(p));
    CHECK(q.vertices() == p.vertices());
    CHECK(q.facets() == p.facets());
    // Every vertex lies on at least dim facets.
    for (const auto& vf : p.vertex_facets()) CHECK(vf.size() >= dim);
  }
}

TEST_CASE("property: triangulation volume does not depend on the apex") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    const auto p = oracle::random_polytope(rng, dim, 8, -3, 3);
    Rational a = 0, b = 0;
    for (const auto& c : triangulate(p, ApexRule::LexSmallest)) a += c.volume();
    for (const auto& c : triangulate(p, ApexRule::LexLargest)) b += c.volume();
    CHECK(a == b);
    CHECK(a > 0);
  }
}

TEST_CASE("property: translation preserves edges and triangulation combinatorics") {
  std::mt19937 rng(5);
  const auto p = oracle::random_polytope(rng, 3, 8, -3, 3);
  const auto t = make_int_vector({4, -7, 2});
  const auto q = translate(p, t);
  REQUIRE(q.vertices().size() == p.vertices().size());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    CHECK(vertex_edge_directions(p, v) == vertex_edge_directions(q, v));
  }
  CHECK(triangulate(p).size() == triangulate(q).size());
}
