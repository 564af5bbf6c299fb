#include <doctest.h>

#include "degen/degeneration.hpp"
#include "degen/json_io.hpp"
#include "degen/symmetric.hpp"

using namespace degen;

TEST_CASE("rationals and vectors round-trip") {
  const Rational q = make_rational(-7, 12);
  CHECK(to_json(q) == "-7/12");
  CHECK(rational_from_json(to_json(q)) == q);
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK(rational_from_json(Json("4/6")) == make_rational(2, 3));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), std::invalid_argument);

  const IntVector v = make_int_vector({3, -1, 0});
  CHECK(int_vector_from_json(to_json(v)) == v);
  CHECK_THROWS_AS(int_vector_from_json(Json::array({"1/2"})), std::invalid_argument);
  const RatVector r{make_rational(1, 3), Rational(0), Rational(-2)};
  CHECK(rat_vector_from_json(to_json(r)) == r);
}

TEST_CASE("matrices round-trip") {
  const RatMatrix m = build_bundle(2).Qprime;
  CHECK(matrix_from_json(to_json(m)) == m);
  Json bad = to_json(m);
  bad["rows"] = 7;
  CHECK_THROWS_AS(matrix_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("cones and polyhedra round-trip") {
  const auto b = build_bundle(2);
  CHECK(cone_from_json(to_json(b.sigmaW)) == b.sigmaW);
  const Cone halfplane(2, {make_int_vector({1, 0})}, {make_int_vector({0, 1})});
  CHECK(cone_from_json(to_json(halfplane)) == halfplane);

  for (const LatticePolyhedron& p : {b.tildeP_X, b.tildeP_W, polytope_b(b), build_symmetric(3).tildeP_n}) {
    CHECK(polyhedron_from_json(to_json(p)) == p);
    CHECK(polyhedron_from_json(to_json(p, true)) == p);
    CHECK(to_json(polyhedron_from_json(to_json(p))) == to_json(p));
  }
  const LatticePolyhedron empty = LatticePolyhedron::empty(3);
  CHECK(polyhedron_from_json(to_json(empty)).is_empty());

  Json wrong = to_json(b.tildeP_X);
  wrong["ambient_rank"] = 2;
  CHECK_THROWS_AS(polyhedron_from_json(wrong), std::invalid_argument);
}

TEST_CASE("fans and groups serialize canonically") {
  const auto m = build_symmetric(3);
  const Json fan = to_json(m.Delta_fan);
  CHECK(fan.at("maximal_cones").size() == 6);
  std::vector<Cone> cones;
  for (const auto& c : fan.at("maximal_cones")) cones.push_back(cone_from_json(c));
  CHECK((Fan{fan.at("ambient_rank").get<std::size_t>(), cones}) == m.Delta_fan);

  const auto g = FiniteAbelianGroup::from_cyclic_orders({3, 3});
  CHECK(to_json(g) == Json::parse(R"({"invariant_factors":[3,3]})"));
}

TEST_CASE("configurations round-trip") {
  const Json j = Json::parse(R"({"n":9,"I_t":[1,7,10],"points":[
    {"component":1,"root":"0/3","generic":[1,0],"a1":"a","mult":1},
    {"component":1,"root":"4/3","generic":[0,1],"a1":"b","mult":2}]})");
  const CycleConfiguration c = configuration_from_json(j);
  CHECK(c.n == 9);
  CHECK(c.I_t == std::vector<std::size_t>{1, 7, 10});
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].position.is_one() == false);
  CHECK(c.points[0].position.generic() == std::vector<long>{1});
  CHECK(c.points[1].position.root() == make_rational(1, 3));
  CHECK(c.points[1].multiplicity == 2);
  CHECK(configuration_from_json(to_json(c)) == c);

  CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"n":2})")), std::invalid_argument);
  CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"n":-1,"I_t":[],"points":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(configuration_from_json(Json::parse(R"({"n":2,"I_t":[],"points":[{"component":0,"root":"x"}]})")),
                  std::invalid_argument);
}
