#include "commensurate/cli/instance_registry.hpp"

#include <cctype>
#include <functional>
#include <utility>

#include "commensurate/completion.hpp"
#include "commensurate/errors.hpp"
#include "commensurate/instances/bs12.hpp"
#include "commensurate/instances/finite_model.hpp"
#include "commensurate/instances/integers.hpp"
#include "commensurate/instances/model_file.hpp"
#include "commensurate/instances/sl2.hpp"
#include "commensurate/instances/targets.hpp"

namespace commensurate::cli {

namespace {

using namespace commensurate::instances;

constexpr std::int64_t max_completion_power = 1 << 20;

template <CommensuratedPair P>
class Adapter final : public Instance {
public:
  using Elem = typename P::element_type;
  using Completion = CompletionElement<P>;
  using Value = std::variant<Elem, Completion>;

  struct Target {
    std::string name;
    Depth kill_level;
    std::function<std::string(const Completion &)> eval;
  };

  struct Config {
    std::string name;
    std::string chain;
    std::string description;
    std::string level_column;
    std::shared_ptr<const P> pair;
    std::vector<std::pair<std::string, Elem>> generators;
    std::vector<LiteralStyle> literals;
    std::function<std::string(Depth)> level_value;
    std::vector<std::string> target_names;
    /// Throws UsageError for names it does not know.
    std::function<Target(std::string_view)> resolve_target;
  };

  explicit Adapter(Config config) : config_(std::move(config)) {
    for (const auto &[name, _] : config_.generators)
      syntax_.generators.push_back(name);
    syntax_.literals = config_.literals;
    syntax_.check_literal = [pair = config_.pair](std::string_view text) { (void)pair->parse(text); };
  }

  std::string name() const override { return config_.name; }
  std::string chain_spec() const override { return config_.chain; }
  std::string description() const override { return config_.description; }
  std::string level_column() const override { return config_.level_column; }
  const Syntax &syntax() const override { return syntax_; }
  std::vector<std::string> target_names() const override { return config_.target_names; }

  Outcome evaluate(const Expression &expr, Depth depth) const override {
    if (expr.kind == Expression::Kind::psi) {
      const Target target = config_.resolve_target(expr.text);
      const Completion f = complete(eval(expr.operands[0], depth), depth);
      return PsiOutcome{target.name, target.kill_level.value(), target.eval(f)};
    }
    const Completion f = complete(eval(expr, depth), depth);
    ElementOutcome out;
    out.requested_depth = depth.value();
    out.attained_depth = f.depth().value();
    out.rep = config_.pair->render(f.rep());
    for (std::size_t d = 0; d <= f.depth().value(); ++d) {
      Elem rep = f.rep();
      if constexpr (HasCanonicalRep<P>)
        rep = config_.pair->canonical_rep(f.rep(), Depth{d});
      out.levels.push_back({d, config_.level_value(Depth{d}), config_.pair->render(rep)});
    }
    return out;
  }

private:
  Completion complete(const Value &v, Depth depth) const {
    if (const Elem *g = std::get_if<Elem>(&v))
      return embed(config_.pair, *g, depth);
    return std::get<Completion>(v);
  }

  Elem exact_power(Elem base, std::int64_t n) const {
    const P &pair = *config_.pair;
    if (n < 0) {
      base = pair.inverse(base);
      n = -n;
    }
    Elem acc = pair.identity();
    while (n > 0) {
      if (n & 1)
        acc = pair.multiply(acc, base);
      n >>= 1;
      if (n > 0)
        base = pair.multiply(base, base);
    }
    return acc;
  }

  Value eval(const Expression &e, Depth depth) const {
    using Kind = Expression::Kind;
    const P &pair = *config_.pair;
    switch (e.kind) {
    case Kind::generator:
      for (const auto &[name, value] : config_.generators) {
        if (name == e.text)
          return value;
      }
      throw UsageError("unknown generator '" + e.text + "'");
    case Kind::literal:
      return pair.parse(e.text);
    case Kind::product: {
      const Value lhs = eval(e.operands[0], depth);
      const Value rhs = eval(e.operands[1], depth);
      const Elem *x = std::get_if<Elem>(&lhs);
      const Elem *y = std::get_if<Elem>(&rhs);
      if (x && y)
        return pair.multiply(*x, *y);
      return mul(complete(lhs, depth), complete(rhs, depth));
    }
    case Kind::power: {
      const Value base = eval(e.operands[0], depth);
      if (const Elem *g = std::get_if<Elem>(&base))
        return exact_power(*g, e.exponent);
      if (e.exponent == 0)
        return pair.identity();
      if (e.exponent > max_completion_power || e.exponent < -max_completion_power)
        throw UsageError("exponent " + std::to_string(e.exponent) +
                         " is too large for a truncated element");
      Completion f = std::get<Completion>(base);
      if (e.exponent < 0)
        f = inv(f);
      Completion acc = f;
      const std::int64_t n = e.exponent < 0 ? -e.exponent : e.exponent;
      for (std::int64_t i = 1; i < n; ++i)
        acc = mul(acc, f);
      return acc;
    }
    case Kind::inverse:
      return inv(complete(eval(e.operands[0], depth), depth));
    case Kind::embed: {
      const Value inner = eval(e.operands[0], depth);
      const Elem *g = std::get_if<Elem>(&inner);
      if (!g)
        throw UsageError("embed(...) expects an exact group element, not a truncated one");
      return embed(config_.pair, *g, depth);
    }
    case Kind::psi:
      throw UsageError("psi(...) may only appear as the outermost form");
    }
    throw UsageError("unsupported expression");
  }

  Config config_;
  Syntax syntax_;
};

template <CommensuratedPair P, class R, class Render>
typename Adapter<P>::Target erase_target(DiscreteTarget<P, R> target, Render render) {
  const Depth kill = target.kill_level;
  std::string name = target.name;
  return {std::move(name), kill,
          [t = std::move(target), render](const CompletionElement<P> &f) {
            return render(psi_eval(t, f));
          }};
}

std::optional<unsigned long> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size() ||
      name.size() - prefix.size() > 9)
    return std::nullopt;
  unsigned long value = 0;
  for (char c : name.substr(prefix.size())) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return std::nullopt;
    value = value * 10 + static_cast<unsigned long>(c - '0');
  }
  return value;
}

std::unique_ptr<Instance> integers_instance(std::string name, IntegersPair pair) {
  auto shared = std::make_shared<const IntegersPair>(pair);
  Adapter<IntegersPair>::Config config;
  config.name = std::move(name);
  config.chain = pair.chain_spec();
  config.description = "integers, G = K = Z";
  config.level_column = "modulus";
  config.pair = shared;
  config.generators = {{"g", BigInt(1)}};
  config.literals = {LiteralStyle::integer};
  config.level_value = [shared](Depth d) { return shared->modulus(d).get_str(); };
  config.target_names = {"mod:<m>"};
  config.resolve_target = [shared](std::string_view target) {
    if (target.substr(0, 4) != "mod:")
      throw UsageError("unknown target '" + std::string(target) + "' (expected mod:<m>)");
    BigInt m;
    try {
      m = parse_bigint(target.substr(4));
      return erase_target(residue_target(*shared, m), [](const BigInt &r) { return r.get_str(); });
    } catch (const MalformedLiteral &) {
      throw UsageError("bad target '" + std::string(target) + "'");
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
  };
  return std::make_unique<Adapter<IntegersPair>>(std::move(config));
}

std::unique_ptr<Instance> bs12_instance() {
  auto shared = std::make_shared<const BS12Pair>();
  Adapter<BS12Pair>::Config config;
  config.name = "bs12";
  config.chain = shared->chain_spec();
  config.description = "BS(1,2) = <a, t | t a t^-1 = a^2>, K = <a>";
  config.level_column = "modulus";
  config.pair = shared;
  config.generators = {{"a", BS12Pair::a()}, {"t", BS12Pair::t()}};
  config.literals = {LiteralStyle::dyadic};
  config.level_value = [shared](Depth d) { return shared->index_of_level(d).get_str(); };
  config.target_names = {"texp"};
  config.resolve_target = [](std::string_view target) {
    if (target != "texp")
      throw UsageError("unknown target '" + std::string(target) + "' (expected texp)");
    return erase_target(t_exponent_target(), [](std::int64_t m) { return std::to_string(m); });
  };
  return std::make_unique<Adapter<BS12Pair>>(std::move(config));
}

std::unique_ptr<Instance> sl2_instance(unsigned long p) {
  std::shared_ptr<const SL2Pair> shared;
  try {
    shared = std::make_shared<const SL2Pair>(p);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  Adapter<SL2Pair>::Config config;
  config.name = "sl2p" + std::to_string(p);
  config.chain = shared->chain_spec();
  config.description = "SL2(Z[1/" + std::to_string(p) + "]), K = SL2(Z)";
  config.level_column = "congruence";
  config.pair = shared;
  const Rational pq(p);
  const Rational inv_p(1, p);
  config.generators = {
      {"x", shared->make(1, 1, 0, 1)},
      {"y", shared->make(1, 0, 1, 1)},
      {"s", shared->make(0, -1, 1, 0)},
      {"h", shared->make(pq, 0, 0, inv_p)},
  };
  config.literals = {LiteralStyle::matrix};
  config.level_value = [shared](Depth d) { return shared->level_modulus(d).get_str(); };
  config.resolve_target = [name = config.name](std::string_view target) -> Adapter<SL2Pair>::Target {
    throw UsageError("instance " + name + " has no target '" + std::string(target) + "'");
  };
  return std::make_unique<Adapter<SL2Pair>>(std::move(config));
}

std::unique_ptr<Instance> model_instance(std::string_view path) {
  auto model = std::make_shared<const FiniteModel>(load_model(std::string(path)));
  auto shared = std::make_shared<const FiniteModelPair>(model);
  Adapter<FiniteModelPair>::Config config;
  config.name = "model:" + std::string(path);
  config.chain = shared->chain_spec();
  config.description = "finite model " + model->name() + " of order " +
                       std::to_string(model->group().order());
  config.level_column = "index";
  config.pair = shared;
  for (const auto &g : model->generators())
    config.generators.emplace_back(g.name, FiniteElement{g.element});
  config.literals = {LiteralStyle::table_index};
  if (model->group().is_permutation_group())
    config.literals.push_back(LiteralStyle::permutation);
  config.level_value = [shared](Depth d) { return shared->index_of_level(d).get_str(); };
  config.target_names = {"quot"};
  config.resolve_target = [model](std::string_view target) {
    if (target != "quot")
      throw UsageError("unknown target '" + std::string(target) + "' (expected quot)");
    return erase_target(quotient_target(model),
                        [model](ElementIndex x) { return model->group().label(x); });
  };
  return std::make_unique<Adapter<FiniteModelPair>>(std::move(config));
}

} // namespace

std::unique_ptr<Instance> open_instance(std::string_view name) {
  if (name == "zfact")
    return integers_instance("zfact", IntegersPair::factorial());
  if (name == "bs12")
    return bs12_instance();
  if (name.substr(0, 6) == "model:")
    return model_instance(name.substr(6));
  if (auto p = parse_suffix(name, "sl2p"))
    return sl2_instance(*p);
  if (auto base = parse_suffix(name, "z")) {
    if (*base < 2)
      throw UsageError("integer chain base must be at least 2");
    return integers_instance(std::string(name), IntegersPair::with_base(*base));
  }
  throw UsageError("unknown instance '" + std::string(name) + "'");
}

std::vector<CatalogEntry> instance_catalog() {
  std::vector<CatalogEntry> out;
  for (const char *name : {"z2", "z3", "zfact", "bs12", "sl2p2", "sl2p3"}) {
    auto inst = open_instance(name);
    out.push_back({inst->name(), inst->chain_spec(), inst->description()});
  }
  out.push_back({"z<base>", "base:<base>", "integers with chain base^d Z, base >= 2"});
  out.push_back({"sl2p<p>", "congruence:<p>", "SL2(Z[1/p]) for a prime p"});
  out.push_back({"model:<file>", "explicit", "finite model read from a model file"});
  return out;
}

} // namespace commensurate::cli
