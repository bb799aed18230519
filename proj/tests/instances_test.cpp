#include <doctest.h>

#include <functional>
#include <random>

#include "commensurate/errors.hpp"
#include "commensurate/instances/bs12.hpp"
#include "commensurate/instances/finite_model.hpp"
#include "commensurate/instances/integers.hpp"
#include "commensurate/instances/sl2.hpp"
#include "support.hpp"

using namespace commensurate;
using namespace commensurate::instances;
using testing_support::uniform;

namespace {

/// Samplers for one pair: random elements of G and K and random members of
/// N_d.
template <class P>
struct Sampler {
  std::function<typename P::element_type(std::mt19937_64 &)> any;
  std::function<typename P::element_type(std::mt19937_64 &)> in_k;
  std::function<typename P::element_type(std::mt19937_64 &, Depth)> in_level;
};

/// Randomised check of the pair contract: nesting, normality in K,
/// monotone conj_depth and two-sided conjugation soundness on the whole coset.
template <class P>
void check_contract(const P &pair, const Sampler<P> &s, std::size_t max_depth, int trials,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const Depth d{static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_depth)))};
    const auto g = s.any(rng);
    const Depth j = pair.conj_depth(g, d);
    REQUIRE(j >= d);
    CHECK(pair.conj_depth(g, d + 1) >= j);

    const auto x = pair.multiply(g, s.in_level(rng, d));
    CHECK(pair.conj_depth(x, d) == j);
    const auto n = s.in_level(rng, j);
    CHECK(pair.in_level(pair.multiply(pair.multiply(x, n), pair.inverse(x)), d));
    CHECK(pair.in_level(pair.multiply(pair.multiply(pair.inverse(x), n), x), d));

    const auto deeper = s.in_level(rng, d + 1);
    CHECK(pair.in_level(deeper, d));
    const auto k = s.in_k(rng);
    const auto m = s.in_level(rng, d);
    CHECK(pair.in_level(pair.multiply(pair.multiply(k, m), pair.inverse(k)), d));
  }
}

Matrix2 elementary_upper(const SL2Pair &pair, const BigInt &x) { return pair.make(1, Rational(x), 0, 1); }
Matrix2 elementary_lower(const SL2Pair &pair, const BigInt &x) { return pair.make(1, 0, Rational(x), 1); }

Sampler<SL2Pair> sl2_sampler(const SL2Pair &pair) {
  const unsigned long p = pair.prime();
  const Matrix2 h = pair.make(Rational(p), 0, 0, Rational(1, p));
  auto integral_word = [&pair](std::mt19937_64 &rng, const BigInt &step) {
    Matrix2 out;
    for (int i = uniform(rng, 1, 5); i > 0; --i) {
      const BigInt k = step * BigInt(uniform(rng, -3, 3));
      out = out * (i % 2 ? elementary_upper(pair, k) : elementary_lower(pair, k));
    }
    return out;
  };
  Sampler<SL2Pair> s;
  s.in_k = [integral_word](std::mt19937_64 &rng) { return integral_word(rng, BigInt(1)); };
  s.in_level = [integral_word, p](std::mt19937_64 &rng, Depth d) {
    return integral_word(rng, pow_ui(BigInt(p), d.value()));
  };
  s.any = [integral_word, h, &pair](std::mt19937_64 &rng) {
    Matrix2 out = integral_word(rng, BigInt(1));
    for (int i = uniform(rng, 0, 2); i > 0; --i) {
      out = out * (uniform(rng, 0, 1) ? h : pair.inverse(h));
      out = out * integral_word(rng, BigInt(1));
    }
    return out;
  };
  return s;
}

} // namespace

TEST_CASE("integers: levels and contract") {
  const auto z2 = IntegersPair::with_base(2);
  CHECK(z2.in_level(8, Depth{3}));
  CHECK_FALSE(z2.in_level(8, Depth{4}));
  CHECK(z2.conj_depth(12345, Depth{6}) == Depth{6});
  CHECK(z2.canonical_rep(-5, Depth{4}) == 11);
  CHECK(z2.chain_spec() == "base:2");
  CHECK_THROWS_AS(IntegersPair::with_base(1), std::invalid_argument);

  const auto fact = IntegersPair::factorial();
  CHECK_FALSE(fact.in_level(5, Depth{5}));
  CHECK(fact.in_level(120, Depth{5}));
  CHECK(fact.modulus(Depth{0}) == 1);
  CHECK(fact.chain_spec() == "factorial");

  for (const auto &pair : {z2, IntegersPair::with_base(3), fact}) {
    Sampler<IntegersPair> s;
    s.any = [](std::mt19937_64 &rng) { return BigInt(uniform(rng, -1000000, 1000000)); };
    s.in_k = s.any;
    s.in_level = [&pair](std::mt19937_64 &rng, Depth d) {
      return BigInt(pair.modulus(d) * uniform(rng, -100, 100));
    };
    check_contract(pair, s, 8, 1000, 11);
  }
}

TEST_CASE("dyadic numbers") {
  CHECK(Dyadic::parse("3/4").to_string() == "3/4");
  CHECK(Dyadic::parse("6/8") == Dyadic::parse("3/4"));
  CHECK(Dyadic::parse("-4/2").to_string() == "-2");
  CHECK(Dyadic::parse("0/16").to_string() == "0");
  CHECK(Dyadic(3).scaled(-2) == Dyadic::parse("3/4"));
  CHECK(Dyadic::parse("-3/4").mod_pow2(0) == Dyadic::parse("1/4"));
  CHECK(Dyadic(13).mod_pow2(3) == Dyadic(5));
  CHECK(Dyadic(16).divisible_by_pow2(4));
  CHECK_FALSE(Dyadic(16).divisible_by_pow2(5));
  CHECK_FALSE(Dyadic::parse("1/2").divisible_by_pow2(0));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ContractViolation);
  CHECK_THROWS_AS(Dyadic::parse("1/0"), MalformedLiteral);
  CHECK_THROWS_AS(Dyadic::parse("x"), MalformedLiteral);
}

TEST_CASE("BS(1,2): arithmetic and contract") {
  const BS12Pair pair;
  const auto a = BS12Pair::a();
  const auto t = BS12Pair::t();
  const auto relation = pair.multiply(pair.multiply(pair.multiply(t, a), pair.inverse(t)),
                                      pair.inverse(pair.multiply(a, a)));
  CHECK(relation == pair.identity());
  CHECK(pair.multiply(pair.multiply(t, a), pair.inverse(t)) == BS12Element{Dyadic(2), 0});

  CHECK(pair.in_level({Dyadic(4), 0}, Depth{2}));
  CHECK_FALSE(pair.in_level({Dyadic(4), 1}, Depth{2}));
  CHECK(pair.conj_depth(t, Depth{3}) == Depth{4});
  CHECK(pair.render(pair.parse("(3/4; -2)")) == "(3/4; -2)");
  CHECK(pair.parse("( 6/8 ;-2 )") == BS12Element{Dyadic::parse("3/4"), -2});
  CHECK_THROWS_AS(pair.parse("(1/3; 0)"), ContractViolation);
  CHECK_THROWS_AS(pair.parse("(1; x)"), MalformedLiteral);

  // <a^16> lies in t<a^8>t^-1 and t^-1<a^8>t, but <a^8> does not.
  const auto a8 = BS12Element{Dyadic(8), 0};
  CHECK(pair.in_level(pair.multiply(pair.multiply(t, {Dyadic(16), 0}), pair.inverse(t)), Depth{3}));
  CHECK(pair.in_level(pair.multiply(pair.multiply(pair.inverse(t), {Dyadic(16), 0}), t), Depth{3}));
  CHECK_FALSE(pair.in_level(pair.multiply(pair.multiply(pair.inverse(t), a8), t), Depth{3}));

  Sampler<BS12Pair> s;
  s.any = [](std::mt19937_64 &rng) {
    return BS12Element{Dyadic(BigInt(uniform(rng, -500, 500)), uniform(rng, 0, 4)), uniform(rng, -5, 5)};
  };
  s.in_k = [](std::mt19937_64 &rng) { return BS12Element{Dyadic(uniform(rng, -500, 500)), 0}; };
  s.in_level = [](std::mt19937_64 &rng, Depth d) {
    return BS12Element{Dyadic(BigInt(uniform(rng, -50, 50)) << d.value()), 0};
  };
  check_contract(pair, s, 10, 1000, 12);
}

TEST_CASE("SL2(Z[1/p]): arithmetic and contract") {
  const SL2Pair pair(2);
  CHECK_THROWS_AS(SL2Pair(4), std::invalid_argument);
  CHECK_THROWS_AS(pair.make(1, 1, 0, 2), ContractViolation);
  CHECK_THROWS_AS(pair.make(Rational(1, 3), 0, 0, 3), ContractViolation);
  CHECK(pair.in_level(pair.make(1, 2, 0, 1), Depth{1}));
  CHECK_FALSE(pair.in_level(pair.make(1, 2, 0, 1), Depth{2}));
  CHECK_FALSE(pair.in_level(pair.make(1, Rational(1, 2), 0, 1), Depth{0}));
  CHECK(pair.index_of_level(Depth{0}) == 1);
  CHECK(pair.index_of_level(Depth{1}) == 6);
  CHECK(pair.index_of_level(Depth{2}) == 48);

  const Matrix2 integral = pair.make(2, 1, 1, 1);
  CHECK(pair.conj_depth(integral, Depth{4}) == Depth{4});

  const Matrix2 h = pair.make(2, 0, 0, Rational(1, 2));
  CHECK(pair.conj_depth(h, Depth{1}) == Depth{3});
  // Gamma(8) conjugates into Gamma(2) both ways; Gamma(4) does not.
  for (long k = -6; k <= 6; ++k) {
    for (const Matrix2 &n : {elementary_upper(pair, 8 * k), elementary_lower(pair, 8 * k)}) {
      CHECK(pair.in_level(h * n * pair.inverse(h), Depth{1}));
      CHECK(pair.in_level(pair.inverse(h) * n * h, Depth{1}));
    }
  }
  CHECK_FALSE(pair.in_level(pair.inverse(h) * elementary_upper(pair, 4) * h, Depth{1}));

  CHECK(pair.render(pair.parse("[[ 2, 1/2 ],[0,1/2]]")) == "[[2,1/2],[0,1/2]]");
  CHECK(pair.parse("[[2,2/4],[0,1/2]]") == pair.make(2, Rational(1, 2), 0, Rational(1, 2)));
  CHECK_THROWS_AS(pair.parse("[[1,2],[3]]"), MalformedLiteral);

  for (unsigned long p : {2ul, 3ul}) {
    const SL2Pair q(p);
    const auto s = sl2_sampler(q);
    check_contract(q, s, 4, 300, 13 + p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      const Matrix2 x = s.any(rng);
      const Matrix2 y = s.any(rng);
      CHECK((x * y).determinant() == 1);
      CHECK(q.inverse(x).determinant() == 1);
      CHECK(x * q.inverse(x) == q.identity());
    }
  }
}

TEST_CASE("permutations compose left to right") {
  const auto a = Permutation::parse("(1 2)");
  const auto b = Permutation::parse("(2 3)");
  CHECK(a.then(b).to_cycles() == "(1 3 2)");
  CHECK(Permutation::parse("(1 2)(2 3)") == a.then(b));
  CHECK(Permutation::parse("()").is_identity());
  CHECK(Permutation::parse("(1 2 3 4)").inverse().to_cycles() == "(1 4 3 2)");
  CHECK_THROWS_AS(Permutation::parse("(1 2"), MalformedLiteral);
  CHECK_THROWS_AS(Permutation::parse("(1 1)"), MalformedLiteral);
  CHECK_THROWS_AS(Permutation::parse("(1 17)"), MalformedLiteral);
}

TEST_CASE("finite groups") {
  const auto s4 = FiniteGroup::from_permutations(
      {Permutation::parse("(1 2)"), Permutation::parse("(1 2 3 4)")});
  CHECK(s4.order() == 24);
  CHECK(s4.label(s4.identity()) == "()");
  CHECK(s4.parse_element("(1 2)(3 4)") == *s4.find(Permutation::parse("(1 2)(3 4)")));
  CHECK(s4.parse_element("#0") == s4.identity());
  CHECK_THROWS_AS(s4.parse_element("#24"), ContractViolation);
  CHECK_THROWS_AS(s4.parse_element("(1 5)"), ContractViolation);
  for (ElementIndex x = 0; x < s4.order(); ++x)
    CHECK(s4.multiply(x, s4.inverse(x)) == s4.identity());

  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ModelError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), ModelError);
  CHECK(FiniteGroup::from_table({{0, 1}, {1, 0}}).order() == 2);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({Permutation::parse("(1 2 3 4 5 6)"),
                                                  Permutation::parse("(1 2)")}),
                  ModelError);
}

TEST_CASE("finite-model pairs") {
  const auto model = testing_support::load("s4");
  const FiniteModelPair pair(model);
  CHECK(pair.chain_spec() == "orders 6 > 3 > 1");
  CHECK(pair.index_of_level(Depth{1}) == 2);
  CHECK(pair.index_of_level(Depth{2}) == 6);
  CHECK(pair.level_transversal(Depth{1}).size() == 2);

  // In the abelian quotient levels of z8 conjugation changes nothing.
  const auto z8 = testing_support::load("z8");
  const FiniteModelPair zpair(z8);
  for (ElementIndex g = 0; g < z8->group().order(); ++g) {
    for (std::size_t d = 0; d < 5; ++d)
      CHECK(zpair.conj_depth({g}, Depth{d}) == Depth{d});
  }

  for (const char *name : {"s4", "s4_d8", "z8"}) {
    const auto m = testing_support::load(name);
    const FiniteModelPair p(m);
    const auto &group = m->group();
    Sampler<FiniteModelPair> s;
    s.any = [&group](std::mt19937_64 &rng) {
      return FiniteElement{static_cast<ElementIndex>(uniform(rng, 0, group.order() - 1))};
    };
    s.in_k = [m](std::mt19937_64 &rng) {
      const auto &k = m->subgroup_k().elements();
      return FiniteElement{k[uniform(rng, 0, k.size() - 1)]};
    };
    s.in_level = [m](std::mt19937_64 &rng, Depth d) {
      const auto &n = m->level(d).elements();
      return FiniteElement{n[uniform(rng, 0, n.size() - 1)]};
    };
    check_contract(p, s, m->chain_length(), 1000, 14);

    // Brute force: the least j works, and it is never above the envelope.
    for (ElementIndex g = 0; g < group.order(); ++g) {
      for (std::size_t d = 0; d < m->chain_length(); ++d) {
        const Depth least = p.least_conj_depth({g}, Depth{d});
        CHECK(least <= p.conj_depth({g}, Depth{d}));
      }
    }
  }
}

TEST_CASE("finite-model chains are validated") {
  const auto bad = load_model(std::string(FIXTURES_DIR) + "/s4_bad_bottom.model");
  CHECK_THROWS_AS(FiniteModelPair(std::make_shared<const FiniteModel>(bad)), ModelError);

  const auto s4 = testing_support::load("s4");
  const auto &g = s4->group();
  const ElementIndex cycle = g.parse_element("(1 2 3)");
  const ElementIndex swap = g.parse_element("(1 2)");
  // Not descending.
  CHECK_THROWS_AS(FiniteModelPair(std::make_shared<const FiniteModel>(FiniteModel::from_generator_sets(
                      "flat", g, {{swap, cycle}, {swap, cycle}}))),
                  ModelError);
  // <(1 2)> is not normal in S3.
  CHECK_THROWS_AS(FiniteModelPair(std::make_shared<const FiniteModel>(FiniteModel::from_generator_sets(
                      "skew", g, {{swap, cycle}, {swap}, {}}))),
                  ModelError);
}
