#include <doctest.h>

#include <json.hpp>

#include "commensurate/errors.hpp"
#include "commensurate/instances/model_file.hpp"
#include "commensurate/oracle/oracle.hpp"
#include "support.hpp"

using namespace commensurate;
using namespace commensurate::instances;
using namespace commensurate::oracle;

namespace {

GroupTable table_of(const FiniteGroup &g) {
  GroupTable t;
  for (ElementIndex x = 0; x < g.order(); ++x)
    t.reps.push_back(x);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    for (ElementIndex y = 0; y < g.order(); ++y)
      t.product.push_back(g.multiply(x, y));
  }
  return t;
}

GroupTable cyclic(std::size_t n) {
  GroupTable t;
  for (std::size_t x = 0; x < n; ++x) {
    t.reps.push_back(static_cast<ElementIndex>(x));
    for (std::size_t y = 0; y < n; ++y)
      t.product.push_back((x + y) % n);
  }
  return t;
}

} // namespace

TEST_CASE("set arithmetic") {
  const auto s4 = testing_support::load("s4");
  const auto &g = s4->group();
  const ElementIndex c = g.parse_element("(1 2 3)");
  const ElementSet a3 = s4->level(Depth{1});
  CHECK(set_product(g, a3, a3) == a3);
  CHECK(set_inverse(g, a3) == a3);
  CHECK(set_intersection(a3, s4->subgroup_k()) == a3);
  CHECK(conjugate_set(g, a3, g.parse_element("(1 2)")) == a3);
  CHECK(conjugate_set(g, a3, g.parse_element("(1 4)")) != a3);
  CHECK(is_union_of_left_cosets(g, s4->subgroup_k(), a3));
  CHECK_FALSE(is_union_of_left_cosets(g, ElementSet({c}), a3));
}

TEST_CASE("refinement by conjugates") {
  const auto s4 = testing_support::load("s4");
  const auto &g = s4->group();
  const ElementSet a3 = s4->level(Depth{1});
  const ElementIndex x = g.parse_element("(1 4)");
  const Refinement r = refine_by_conjugates(*s4, a3, x);
  CHECK(r.postcondition);
  CHECK(r.m.is_subset_of(a3));
  CHECK(is_subgroup(g, r.m));
  // Checked here by set arithmetic rather than trusting the flag.
  const ElementSet xn = set_product(g, ElementSet({x}), a3);
  for (ElementIndex h = 0; h < g.order(); ++h) {
    const ElementSet piece = set_intersection(xn, set_product(g, a3, ElementSet({h})));
    CHECK(is_union_of_left_cosets(g, piece, r.m));
  }

  // Normal N: nothing to refine, and every piece is empty or all of gN.
  const auto d8 = testing_support::load("s4_d8");
  const ElementSet v4 = d8->bottom();
  const Refinement normal = refine_by_conjugates(*d8, v4, d8->group().parse_element("(1 2 3)"));
  CHECK(normal.m == v4);
  for (const auto &piece : normal.pieces)
    CHECK((piece.empty() || piece.size() == v4.size()));

  const auto z8 = testing_support::load("z8");
  CHECK(refine_by_conjugates(*z8, z8->level(Depth{2}), 3).m == z8->level(Depth{2}));

  for (const char *name : {"s4", "s4_d8", "z8"}) {
    const auto report = verify_refinement(*testing_support::load(name));
    CHECK(report.ok());
    CHECK(report.checks > 0);
  }
}

TEST_CASE("completion tables") {
  const auto s4 = testing_support::load("s4");
  const GroupTable full = enumerate_completion(*s4);
  CHECK(full.size() == 24);
  CHECK(is_group(full));
  CHECK(find_isomorphism(full, table_of(s4->group())));

  const auto d8 = testing_support::load("s4_d8");
  const GroupTable six = enumerate_completion(*d8);
  CHECK(six.size() == 6);
  const auto s3 = FiniteGroup::from_permutations({Permutation::parse("(1 2)"), Permutation::parse("(1 2 3)")});
  CHECK(find_isomorphism(six, table_of(s3)));
  CHECK_FALSE(find_isomorphism(six, cyclic(6)));
  CHECK(find_isomorphism(six, quotient_table(*d8)));

  const auto z8 = testing_support::load("z8");
  CHECK(find_isomorphism(enumerate_completion(*z8), cyclic(8)));

  // One-level chain with K normal: the completion is G/K.
  const auto v4_only = parse_model("gens: (1 2), (1 2 3 4)\nlevel: (1 2)(3 4), (1 3)(2 4)\n");
  const GroupTable quotient = enumerate_completion(v4_only);
  CHECK(quotient.size() == 6);
  CHECK(find_isomorphism(quotient, table_of(s3)));

  const auto bad = load_model(std::string(FIXTURES_DIR) + "/s4_bad_bottom.model");
  CHECK_THROWS_AS(enumerate_completion(bad), ModelError);
}

TEST_CASE("left and right cosets") {
  const auto s4 = testing_support::load("s4");
  const auto chains = coherent_chains(*s4);
  CHECK(chains.size() == 24);
  for (const auto &chain : chains)
    CHECK(left_right_check(*s4, chain));
  for (const char *name : {"s4", "s4_d8", "z8"})
    CHECK(verify_left_right(*testing_support::load(name)).ok());
}

TEST_CASE("engine comparison") {
  for (const char *name : {"s4", "s4_d8", "z8"}) {
    auto pair = std::make_shared<const FiniteModelPair>(testing_support::load(name));
    const auto report = compare_engine(pair, 1000, 5);
    CHECK_MESSAGE(report.ok(), name);
    CHECK(report.trials == 1000);
  }

  auto corrupt = std::make_shared<const FiniteModelPair>(std::make_shared<const FiniteModel>(
      load_model(std::string(FIXTURES_DIR) + "/s4_corrupt.model")));
  const auto report = compare_engine(corrupt, 200, 5);
  CHECK_FALSE(report.ok());

  const auto doc = nlohmann::json::parse(to_json(report));
  CHECK(doc["model"] == "s4_corrupt");
  CHECK(doc["trials"] == 200);
  CHECK(doc["mismatches"].size() == report.mismatches.size());
}
