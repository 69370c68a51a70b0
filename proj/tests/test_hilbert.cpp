#include "chowcheck/generators.hpp"
#include "chowcheck/hilbert.hpp"

#include <doctest.h>

using namespace chowcheck;

TEST_CASE("cone_slice") {
  CHECK(cone_slice(segment(0, 1), 2) ==
        std::vector<IntVector>{make_int_vector({0, 2}), make_int_vector({1, 2}), make_int_vector({2, 2})});
  const auto s = cone_slice(hirzebruch(2), 1);
  CHECK(s.size() == 5);
  for (const auto& a : s) CHECK(a.back() == 1);
  CHECK(cone_slice(hirzebruch(3), 0) == std::vector<IntVector>{make_int_vector({0, 0, 0})});
  CHECK_THROWS(cone_slice(hirzebruch(3), -1));
}

TEST_CASE("property: cone slices are lifted dilates") {
  for (const auto& p : {hirzebruch(3), standard_simplex(3), cross_polytope(2)}) {
    for (long i = 1; i <= 3; ++i) {
      auto lifted = enumerate(p, i);
      for (auto& a : lifted) a.emplace_back(i);
      CHECK(cone_slice(p, i) == lifted);
    }
  }
}

TEST_CASE("derivative_series") {
  const auto t = derivative_series(segment(0, 1), 3);
  CHECK(t.derivative_series ==
        std::vector<RatVector>{make_rat_vector({1}), make_rat_vector({3}), make_rat_vector({6})});
  for (const auto& c : derivative_series(segment(-1, 1), 5).derivative_series) CHECK(is_zero(c));
  const auto d2 = derivative_series(hirzebruch(2), 2);
  CHECK(d2.derivative_series == std::vector<RatVector>{make_rat_vector({4, 2}), make_rat_vector({19, 10})});
  CHECK(d2.per_degree == count_and_sum_levels(hirzebruch(2), {1, 2}));
  CHECK_THROWS(derivative_series(hirzebruch(2), 0));
}

TEST_CASE("semistable_series_check") {
  for (long k = 2; k <= 4; ++k) {
    const auto c = semistable_series_check(hirzebruch(k), 3);
    CHECK_FALSE(c.passes);
    REQUIRE(c.first_failing_degree);
    CHECK(*c.first_failing_degree == 1);
  }
  const auto sq = semistable_series_check(unit_cube(2), 4);
  CHECK(sq.passes);
  CHECK_FALSE(sq.first_failing_degree);
}

TEST_CASE("property: reflexive symmetric polytopes have a vanishing derivative series") {
  for (const auto& p : {cross(2), cross(3), cross_polytope(2), cross_polytope(3)}) {
    const auto c = semistable_series_check(p, 4);
    CHECK(c.reflexive);
    CHECK(c.passes);
    CHECK(c.nonzero_derivative_degrees.empty());
  }
}
