#include <doctest.h>

#include "commensurate/errors.hpp"
#include "commensurate/instances/model_file.hpp"
#include "support.hpp"

using namespace commensurate;
using namespace commensurate::instances;

TEST_CASE("shipped models load") {
  const auto s4 = testing_support::load("s4");
  CHECK(s4->name() == "s4");
  CHECK(s4->group().order() == 24);
  CHECK(s4->chain_length() == 3);
  CHECK(s4->subgroup_k().size() == 6);
  CHECK(s4->bottom().size() == 1);
  REQUIRE(s4->generators().size() == 2);
  CHECK(s4->generators()[0].name == "g1");
  CHECK(s4->group().label(s4->generators()[1].element) == "(1 2 3 4)");

  const auto d8 = testing_support::load("s4_d8");
  CHECK(d8->subgroup_k().size() == 8);
  CHECK(d8->bottom().size() == 4);

  const auto z8 = testing_support::load("z8");
  CHECK_FALSE(z8->group().is_permutation_group());
  CHECK(z8->chain_length() == 4);
  CHECK(z8->level(Depth{2}).size() == 2);
  CHECK(z8->level(Depth{9}).size() == 1);
}

TEST_CASE("model text format") {
  const auto m = parse_model("# comment\nname: c3\ntable:\n0 1 2\n1 2 0\n2 0 1\nend\ngens: #1\nlevel: #1\nlevel:\n");
  CHECK(m.name() == "c3");
  CHECK(m.group().order() == 3);
  CHECK(m.generators()[0].name == "g1");

  const auto fixture = load_model(std::string(FIXTURES_DIR) + "/s4_corrupt.model");
  CHECK(fixture.conj_mode() == ConjDepthMode::understated);
}

TEST_CASE("model format errors") {
  CHECK_THROWS_AS(load_model(std::string(FIXTURES_DIR) + "/malformed.model"), ModelError);
  CHECK_THROWS_AS(load_model(std::string(FIXTURES_DIR) + "/no_such.model"), ModelError);
  CHECK_THROWS_AS(parse_model("name: x\ngens: (1 2)\n"), ModelError);
  CHECK_THROWS_AS(parse_model("gens: (1 2)\nlevel: (1 2)\ncolour: red\n"), ModelError);
  CHECK_THROWS_AS(parse_model("table:\n0 1\n1 0\nlevel: #1\n"), ModelError);
  CHECK_THROWS_AS(parse_model("table:\n0 x\n1 0\nend\nlevel: #1\n"), ModelError);
  CHECK_THROWS_AS(parse_model("gens: (1 2)\nlevel: (1 3)\n"), ModelError);
  CHECK_THROWS_AS(parse_model("gens: (1 2)\nlevel: (1 2)\nfixture: other\n"), ModelError);
  CHECK_THROWS_AS(parse_model("level: ()\n"), ModelError);
}
