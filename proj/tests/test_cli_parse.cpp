#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slantlab/json_io.hpp"
#include "slantlab/parse.hpp"
#include "slantlab/verify.hpp"
#include "test_support.hpp"

using namespace slantlab;
using namespace slantlab::testing;

TEST_CASE("symbol shorthand") {
  const int band = 16;
  CHECK((parse_symbol("z^4", band) - monomial(band, 4)).norm() == 0.0);
  CHECK((parse_symbol("z", band) - monomial(band, 1)).norm() == 0.0);
  CHECK((parse_symbol("1", band) - monomial(band, 0)).norm() == 0.0);
  CHECK((parse_symbol("conj(z)", band) - monomial(band, -1)).norm() == 0.0);
  CHECK((parse_symbol("conj(z)^3", band) - monomial(band, -3)).norm() == 0.0);

  const CircleFunction f = parse_symbol("z + conj(z)", band);
  CHECK(dist(f.coeff(1), 1.0) == 0.0);
  CHECK(dist(f.coeff(-1), 1.0) == 0.0);

  const CircleFunction g = parse_symbol("(2+1i)*z^3 + 0.5*conj(z)^2 - z", band);
  CHECK(dist(g.coeff(3), Complex(2.0, 1.0)) == 0.0);
  CHECK(dist(g.coeff(-2), 0.5) == 0.0);
  CHECK(dist(g.coeff(1), -1.0) == 0.0);

  CHECK(dist(parse_symbol("1i", band).coeff(0), I) == 0.0);
  CHECK(dist(parse_symbol("i*z", band).coeff(1), I) == 0.0);
  CHECK(dist(parse_symbol("(0.5-2i)", band).coeff(0), Complex(0.5, -2.0)) == 0.0);
  CHECK(dist(parse_symbol("2*z*z", band).coeff(2), 2.0) == 0.0);
  CHECK(dist(parse_symbol("-3e-1*z", band).coeff(1), -0.3) == 0.0);

  CHECK_THROWS_AS(parse_symbol("", band), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("z^", band), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("q^2", band), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("z^99", band), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("conj(w)", band), std::invalid_argument);
}

TEST_CASE("inner function shorthand") {
  CHECK(parse_inner("z^4").degree() == 4);
  CHECK(parse_inner("z").degree() == 1);
  CHECK(parse_inner("z^0").is_constant());
  CHECK_THROWS_AS(parse_inner("w^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_inner("z^2 extra"), std::invalid_argument);

  const FiniteBlaschke b =
      parse_inner("{\"constant\": [0, 1], \"zeros\": [[0.5, 0.25]]}");
  CHECK(b.degree() == 1);
  CHECK(dist(b.constant(), I) == 0.0);
  CHECK(dist(b.zeros()[0], Complex(0.5, 0.25)) == 0.0);
}

TEST_CASE("JSON round trips") {
  Rng rng(71);
  const CircleFunction f = random_trig_poly(rng, 9, 9);
  CHECK((circle_fn_from_json(to_json(f)) - f).norm() == 0.0);

  const FiniteBlaschke b = random_blaschke(rng, 3, 0.8);
  const FiniteBlaschke b2 = blaschke_from_json(to_json(b));
  CHECK(b2.degree() == 3);
  CHECK(dist(b2.constant(), b.constant()) == 0.0);
  for (int i = 0; i < 3; ++i) CHECK(dist(b2.zeros()[i], b.zeros()[i]) == 0.0);

  // inline JSON accepted wherever shorthand is
  const CircleFunction g = parse_symbol(to_json(f).dump(), 9);
  CHECK((g - f).norm() == 0.0);
}

TEST_CASE("serialized operator shape") {
  const ModelSpacePtr ka = ModelSpace::build(FiniteBlaschke::power(3), 16);
  const ModelSpacePtr kb = ModelSpace::build(FiniteBlaschke::power(2), 16);
  const OperatorMatrix U =
      slant_compression(monomial(16, 1), ka, kb, 2);
  const Json j = to_json(U);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 3);
  CHECK(j.at("k") == 2);
  CHECK(j.at("entries").size() == 6);

  const SpaceElement e = ka->element(Eigen::VectorXcd::Unit(3, 1));
  const Json je = to_json(e);
  CHECK(je.at("coords").size() == 3);
  CHECK(je.at("space_id") == ka->id());
  CHECK(ka->id() != kb->id());
}

TEST_CASE("verdict records") {
  const Json v = verdict_json("sample", 1e-9, 1e-8, true);
  CHECK(v.at("test") == "sample");
  CHECK(v.at("pass") == true);
  CHECK_FALSE(v.contains("witness"));

  PropertyRecord r{"suiteX", 3, "testY", 0.5, 1e-4, false, Json()};
  const Json jr = to_json(r);
  CHECK(jr.at("suite") == "suiteX");
  CHECK(jr.at("trial") == 3);
  CHECK(jr.at("pass") == false);
}

TEST_CASE("suite configuration invariants") {
  SuiteConfig bad;
  bad.tol = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = SuiteConfig{};
  bad.trials = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = SuiteConfig{};
  bad.band = 64;  // < 4 * max_degree * max_k
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK_NOTHROW(validate(SuiteConfig{}));
  CHECK_THROWS_AS(run_suite("bogus", SuiteConfig{}), std::invalid_argument);
}
