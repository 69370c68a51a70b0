#include "chowcheck/generators.hpp"
#include "chowcheck/json_io.hpp"
#include "chowcheck/obstruction.hpp"

#include <doctest.h>

using namespace chowcheck;

TEST_CASE("nill-paffenholz normals, column by column") {
  // v_1 .. v_12 transcribed as columns.
  const int columns[12][7] = {
      {1, 0, 0, 0, 0, 0, 0},   {0, 1, 0, 0, 0, 0, 0},   {0, 0, 1, 0, 0, 0, 0},   {0, 0, -1, 0, 0, 0, -1},
      {0, -1, 0, 0, 0, 0, -1}, {-1, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 1, 0, 0, 0},   {0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 1, 0},   {0, 0, 0, -1, -1, -1, 2}, {0, 0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 0, 0, -1},
  };
  const auto& m = nill_paffenholz_normals();
  for (std::size_t col = 0; col < 12; ++col) {
    CAPTURE(col);
    for (std::size_t row = 0; row < 7; ++row) CHECK(m[row][col] == columns[col][row]);
  }
}

TEST_CASE("generate") {
  CHECK(generate("hirzebruch", {"2"}).vertices() ==
        std::vector<IntVector>{make_int_vector({0, 0}), make_int_vector({0, 1}), make_int_vector({1, 1}),
                               make_int_vector({2, 0})});
  CHECK(generate("simplex", {"3"}).vertices() ==
        std::vector<IntVector>{make_int_vector({0, 0, 0}), make_int_vector({0, 0, 1}), make_int_vector({0, 1, 0}),
                               make_int_vector({1, 0, 0})});
  const auto np = generate("nill-paffenholz", {});
  CHECK(np.dim() == 7);
  CHECK(np.facets().inequalities.size() == 12);
  CHECK(is_reflexive(np));
  CHECK(is_delzant(np).is_delzant());
  CHECK(generate("cross", {"2"}).vertices().size() == 4);
  CHECK(generate("segment", {"-2", "3"}) == segment(-2, 3));
  CHECK(generator_id("hirzebruch", {"3"}) == "hirzebruch 3");
}

TEST_CASE("generate rejects bad names and parameters") {
  CHECK_THROWS_AS(generate("dodecahedron", {}), UsageError);
  CHECK_THROWS_AS(generate("hirzebruch", {"1"}), UsageError);
  CHECK_THROWS_AS(generate("hirzebruch", {"x"}), UsageError);
  CHECK_THROWS_AS(generate("hirzebruch", {}), UsageError);
  CHECK_THROWS_AS(generate("simplex", {"0"}), UsageError);
  CHECK_THROWS_AS(generate("segment", {"3", "3"}), UsageError);
  CHECK_THROWS_AS(generate("nill-paffenholz", {"1"}), UsageError);
}

TEST_CASE("scalars serialize as strings") {
  CHECK(to_json(Rational(3, 4)) == Json("3/4"));
  CHECK(to_json(Rational(-2)) == Json("-2"));
  CHECK(to_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(integer_from_json(Json("-12")) == -12);
  CHECK_THROWS_AS(integer_from_json(Json("1/2")), InputError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), InputError);
}

TEST_CASE("polytope JSON round trip") {
  for (const auto& p : {hirzebruch(3), unit_cube(3), cross(2), nill_paffenholz()}) {
    const Json j = to_json(p);
    CHECK(polytope_from_json(j) == p);
    CHECK(polytope_from_json(Json::parse(j.dump())) == p);

    Json only_facets = j;
    only_facets.erase("vertices");
    CHECK(polytope_from_json(only_facets) == p);
  }
  // Vertex-only input goes through the facet search.
  for (const auto& p : {hirzebruch(3), unit_cube(3), cross(2), standard_simplex(4)}) {
    Json only_vertices = to_json(p);
    only_vertices.erase("facets");
    CHECK(polytope_from_json(only_vertices) == p);
  }
}

TEST_CASE("polytope JSON errors") {
  CHECK_THROWS_AS(polytope_from_json(Json::parse("[1,2]")), InputError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"vertices": [[0],[1]]})")), InputError);
  CHECK_THROWS_AS(polytope_from_json(Json::parse(R"({"dim": 1})")), InputError);
  // Vertices and facets that disagree.
  Json j = to_json(unit_cube(2));
  j["vertices"] = to_json(hirzebruch(2))["vertices"];
  CHECK_THROWS_AS(polytope_from_json(j), InputError);
}

TEST_CASE("reports are byte-stable through a round trip") {
  const auto p = hirzebruch(3);
  const auto a = to_json(verdict(p, {5, 1, "hirzebruch 3"})).dump(2);
  const auto q = polytope_from_json(Json::parse(to_json(p).dump()));
  const auto b = to_json(verdict(q, {5, 3, "hirzebruch 3"})).dump(2);
  CHECK(a == b);
}

TEST_CASE("weights JSON") {
  const auto w = weights_from_json(Json::parse(R"([[1,0],["-1",0],[1,0]])"));
  CHECK(w.weights().size() == 2);
  CHECK(weights_from_json(Json::parse(R"({"weights": [[1,0],[-1,0]]})")) == w);
  CHECK_THROWS_AS(weights_from_json(Json::parse("[]")), InputError);
  CHECK_THROWS_AS(weights_from_json(Json::parse("[[1,0],[1]]")), InputError);
}
