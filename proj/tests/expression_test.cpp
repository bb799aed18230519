#include <doctest.h>

#include <random>

#include "commensurate/cli/expression.hpp"
#include "commensurate/cli/instance_registry.hpp"
#include "commensurate/errors.hpp"
#include "support.hpp"

using namespace commensurate;
using namespace commensurate::cli;
using testing_support::uniform;

namespace {

std::size_t error_position(std::string_view src, const Syntax &syntax) {
  try {
    (void)parse_expression(src, syntax);
  } catch (const ParseError &e) {
    return e.position();
  }
  FAIL("no parse error for " << src);
  return 0;
}

struct Alphabet {
  std::vector<std::string> generators;
  std::vector<std::string> literals;
  std::string target;
};

Expression random_expr(std::mt19937_64 &rng, const Alphabet &alpha, int budget) {
  Expression e;
  const int choice = budget <= 0 ? static_cast<int>(uniform(rng, 0, 1)) : static_cast<int>(uniform(rng, 0, 5));
  switch (choice) {
  case 0:
    e.kind = Expression::Kind::generator;
    e.text = alpha.generators[uniform(rng, 0, alpha.generators.size() - 1)];
    break;
  case 1:
    e.kind = Expression::Kind::literal;
    e.text = alpha.literals[uniform(rng, 0, alpha.literals.size() - 1)];
    break;
  case 2:
  case 3:
    e.kind = Expression::Kind::product;
    e.operands.push_back(random_expr(rng, alpha, budget - 1));
    e.operands.push_back(random_expr(rng, alpha, budget - 1));
    break;
  case 4:
    e.kind = Expression::Kind::power;
    e.exponent = uniform(rng, -4, 4);
    e.operands.push_back(random_expr(rng, alpha, budget - 1));
    break;
  default:
    e.kind = uniform(rng, 0, 1) ? Expression::Kind::inverse : Expression::Kind::embed;
    e.operands.push_back(random_expr(rng, alpha, budget - 1));
    break;
  }
  return e;
}

} // namespace

TEST_CASE("products are left-associative and powers bind tighter") {
  const auto bs = open_instance("bs12");
  const Expression e = parse_expression("t*a*t^-1", bs->syntax());
  REQUIRE(e.kind == Expression::Kind::product);
  CHECK(e.operands[0].kind == Expression::Kind::product);
  CHECK(e.operands[1].kind == Expression::Kind::power);
  CHECK(e.operands[1].exponent == -1);
  CHECK(render(e) == "t*a*t^-1");

  CHECK(render(parse_expression(" a * (t * a) ", bs->syntax())) == "a*(t*a)");
  CHECK(render(parse_expression("(a^2)^3", bs->syntax())) == "(a^2)^3");
  CHECK(render(parse_expression("psi( texp , inv(a) )", bs->syntax())) == "psi(texp,inv(a))");
  CHECK(parse_expression("(3/4; -2)", bs->syntax()).kind == Expression::Kind::literal);
  CHECK(parse_expression("(a)", bs->syntax()).kind == Expression::Kind::generator);
}

TEST_CASE("literal styles per instance") {
  const auto z = open_instance("z2");
  CHECK(render(parse_expression("-3^2*embed(5)", z->syntax())) == "(-3)^2*embed(5)");
  const auto s4 = open_instance("model:" + testing_support::model_path("s4"));
  const Expression p = parse_expression("(1 2)(3 4)*#3^2", s4->syntax());
  CHECK(p.operands[0].text == "(1 2)(3 4)");
  CHECK(p.operands[1].kind == Expression::Kind::power);
  CHECK(parse_expression("g1*g2", s4->syntax()).kind == Expression::Kind::product);
  const auto sl2 = open_instance("sl2p2");
  CHECK(parse_expression("[[1, 1], [0, 1]]*x", sl2->syntax()).operands[0].text == "[[1, 1], [0, 1]]");
}

TEST_CASE("syntax errors carry positions") {
  const auto bs = open_instance("bs12");
  CHECK(error_position("t**a", bs->syntax()) == 2);
  CHECK(error_position("a^", bs->syntax()) == 2);
  CHECK(error_position("a*b", bs->syntax()) == 2);
  CHECK(error_position("inv(a", bs->syntax()) == 5);
  CHECK(error_position("a)", bs->syntax()) == 1);
  CHECK(error_position("", bs->syntax()) == 0);
  CHECK(error_position("(1/0; 0)", bs->syntax()) == 0);
  CHECK(error_position("a^99999999999999999999", bs->syntax()) == 2);
  CHECK_THROWS_AS(parse_expression("(1/3; 0)", bs->syntax()), ContractViolation);

  const auto z = open_instance("z2");
  CHECK(error_position("a", z->syntax()) == 0);
}

TEST_CASE("render and parse round-trip") {
  const auto bs = open_instance("bs12");
  const auto z = open_instance("zfact");
  const auto s4 = open_instance("model:" + testing_support::model_path("s4"));
  const std::vector<std::pair<const Instance *, Alphabet>> cases{
      {bs.get(), {{"a", "t"}, {"(3/4; -2)", "(0; 1)", "(-5; 0)"}, "texp"}},
      {z.get(), {{"g"}, {"0", "17", "-3"}, "mod:6"}},
      {s4.get(), {{"g1", "g2"}, {"(1 2)(3 4)", "()", "#5"}, "quot"}},
  };
  std::mt19937_64 rng(21);
  for (const auto &[inst, alpha] : cases) {
    for (int i = 0; i < 300; ++i) {
      Expression e = random_expr(rng, alpha, 4);
      if (i % 5 == 0) {
        Expression call;
        call.kind = Expression::Kind::psi;
        call.text = alpha.target;
        call.operands.push_back(std::move(e));
        e = std::move(call);
      }
      const std::string text = render(e);
      const Expression back = parse_expression(text, inst->syntax());
      CHECK_MESSAGE(same_shape(back, e), text);
      CHECK(render(back) == text);
    }
  }
}
