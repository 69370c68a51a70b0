#include "chowcheck/generators.hpp"
#include "chowcheck/hilbert.hpp"
#include "chowcheck/obstruction.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace chowcheck;

TEST_CASE("residual_at") {
  for (long k = 2; k <= 4; ++k) {
    for (long i = 1; i <= 4; ++i) CHECK(residual_at(hirzebruch(k), i) == oracle::hirzebruch_data::residual(k, i));
  }
  CHECK(is_zero(residual_at(standard_simplex(2), 1)));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long i = 1; i <= 3; ++i) CHECK(is_zero(residual_at(unit_cube(n), i)));
  }
}

TEST_CASE("obstruction_vectors") {
  const auto f = obstruction_vectors(hirzebruch(2));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == make_rat_vector({Rational(1, 12), Rational(-1, 6)}));
  CHECK(f[1] == f[0]);
  for (const auto& v : obstruction_vectors(unit_cube(2))) CHECK(is_zero(v));
  for (long k = 3; k <= 6; ++k) {
    for (const auto& v : obstruction_vectors(hirzebruch(k))) CHECK(v == oracle::hirzebruch_data::obstruction_vector(k));
  }
}

TEST_CASE("a broken top coefficient is an internal error") {
  const auto p = hirzebruch(2);
  const auto e = ehrhart_polynomial(p);
  auto coeffs = sum_polynomial(p).coefficients();
  coeffs.back()[0] += 1;
  CHECK_THROWS_AS(obstruction_vectors(e, SumPolynomial(2, coeffs), measure(p)), InternalError);
}

TEST_CASE("verdict") {
  for (long k = 2; k <= 4; ++k) {
    const auto r = verdict(hirzebruch(k), {10, 1, "hirzebruch"});
    CHECK(r.verdict == VerdictKind::ChowUnstableAt);
    CHECK(r.unstable_levels == std::vector<long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(r.span_rank == 1);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = verdict(standard_simplex(n));
    CHECK(r.verdict == VerdictKind::ObstructionVanishes);
    CHECK(r.levels.size() == n + 1);
    CHECK(r.span_rank == 0);
  }
  const auto c = verdict(cross(2));
  CHECK(c.verdict == VerdictKind::ReflexiveSemistable);
  CHECK(is_zero(c.measure.moment));
}

TEST_CASE("reflexive polytope with nonzero moment") {
  // [-1,1]^2 with the corner (1,1) cut off: reflexive, smooth, moment -(1/3,1/3).
  const auto p = LatticePolytope::from_points(
      2, {make_int_vector({-1, -1}), make_int_vector({1, -1}), make_int_vector({1, 0}), make_int_vector({0, 1}),
          make_int_vector({-1, 1})});
  REQUIRE(is_reflexive(p));
  REQUIRE(is_delzant(p).is_delzant());
  const auto r = verdict(p);
  // A nonzero residual always wins over the reflexive labels.
  CHECK(r.verdict == VerdictKind::ChowUnstableAt);
  CHECK(to_string(VerdictKind::ReflexiveUnstable) == "REFLEXIVE_UNSTABLE");
}

TEST_CASE("non-Delzant input is rejected with the failing vertex") {
  const auto p = LatticePolytope::from_points(
      2, {make_int_vector({0, 0}), make_int_vector({1, 0}), make_int_vector({0, 2})});
  try {
    verdict(p);
    FAIL("expected NotDelzantError");
  } catch (const NotDelzantError& e) {
    CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
    CHECK(e.failure().reason == DelzantFailureReason::NotUnimodular);
  }
}

TEST_CASE("check_point_configuration") {
  const std::vector<IntVector> simplex{make_int_vector({0, 0}), make_int_vector({1, 0}), make_int_vector({0, 1})};
  CHECK(is_zero(check_point_configuration(simplex)));
  const std::vector<IntVector> square{make_int_vector({0, 0}), make_int_vector({1, 0}), make_int_vector({0, 1}),
                                      make_int_vector({1, 1})};
  CHECK(is_zero(check_point_configuration(square)));

  // Even points do not generate Z^2 affinely.
  const std::vector<IntVector> even{make_int_vector({0, 0}), make_int_vector({2, 0}), make_int_vector({0, 2})};
  CHECK_FALSE(affinely_generates_lattice(even));
  CHECK_THROWS_AS(check_point_configuration(even), AffineGenerationError);
  CHECK_THROWS(check_point_configuration(std::vector<IntVector>{make_int_vector({0, 0}), make_int_vector({0, 0}),
                                                                make_int_vector({1, 0}), make_int_vector({0, 1})}));
}

TEST_CASE("check_point_configuration on lattice points of iP is residual_at over vol") {
  for (const auto& p : {hirzebruch(2), hirzebruch(3), standard_simplex(2), unit_cube(2)}) {
    const auto vol = volume(p);
    for (long i = 1; i <= 3; ++i) {
      const auto pts = enumerate(p, i);
      CHECK(check_point_configuration(pts) == (Rational(1) / vol) * residual_at(p, i));
    }
  }
}

TEST_CASE("property: enumerated residuals equal the interpolated expansion") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto p = oracle::random_polytope(rng, n, 6, -3, 3);
    const auto f = obstruction_vectors(p);
    for (long i = 1; i <= static_cast<long>(n) + 3; ++i) CHECK(residual_at(p, i) == residual_from_vectors(f, i));
  }
}

TEST_CASE("property: residuals are translation invariant") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = oracle::random_polytope(rng, 2 + trial % 2, 6, -3, 3);
    IntVector t(p.dim());
    for (std::size_t c = 0; c < t.size(); ++c) t[c] = 7 - static_cast<long>(4 * c);
    for (long i = 1; i <= 3; ++i) CHECK(residual_at(p, i) == residual_at(translate(p, t), i));
  }
  const auto a = verdict(hirzebruch(3), {.i_max = 5, .polytope_id = {}});
  const auto b = verdict(translate(hirzebruch(3), make_int_vector({-4, 9})), {.i_max = 5, .polytope_id = {}});
  CHECK(a.verdict == b.verdict);
  CHECK(a.unstable_levels == b.unstable_levels);
  for (std::size_t j = 0; j < a.levels.size(); ++j) CHECK(a.levels[j].residual == b.levels[j].residual);
}

TEST_CASE("property: unimodular maps transform the residuals linearly") {
  std::mt19937 rng(23);
  const auto p = hirzebruch(3);
  for (int trial = 0; trial < 4; ++trial) {
    const auto m = oracle::random_unimodular(rng, 2);
    const auto q = linear_image(p, m);
    const RatMatrix mm = RatMatrix::from_rows(m);
    const auto a = verdict(p, {.i_max = 4, .polytope_id = {}});
    const auto b = verdict(q, {.i_max = 4, .polytope_id = {}});
    CHECK(a.verdict == b.verdict);
    for (std::size_t j = 0; j < a.levels.size(); ++j) CHECK(b.levels[j].residual == mm * a.levels[j].residual);
  }
}

TEST_CASE("property: series failures coincide with nonzero residual levels") {
  for (const auto& p : {hirzebruch(2), hirzebruch(5), standard_simplex(3), unit_cube(2), cross(2)}) {
    const auto r = verdict(p, {.i_max = 6, .polytope_id = {}});
    const auto s = semistable_series_check(p, 6);
    CHECK(s.failing_degrees == r.unstable_levels);
  }
}
