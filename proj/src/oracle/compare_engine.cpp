#include <random>

#include <json.hpp>

#include "commensurate/completion.hpp"
#include "commensurate/oracle/oracle.hpp"

namespace commensurate::oracle {

namespace {

using Element = CompletionElement<FiniteModelPair>;
using instances::FiniteElement;

std::string describe(const FiniteModelPair &pair, const Element &f) {
  return pair.render(f.rep()) + "@" + to_string(f.depth());
}

/// Level-by-level comparison done on explicit cosets.
Valuation literal_valuation(const FiniteModel &model, const Element &f1, const Element &f2) {
  const std::size_t top = std::min(f1.depth(), f2.depth()).value();
  for (std::size_t d = 0; d <= top; ++d) {
    if (model.left_coset(f1.rep().index, Depth{d}) != model.left_coset(f2.rep().index, Depth{d}))
      return d == 0 ? Valuation::disjoint() : Valuation::at(Depth{d - 1});
  }
  return Valuation::indistinguishable(Depth{top});
}

std::string describe(const Valuation &v) {
  switch (v.kind) {
  case Valuation::Kind::disjoint:
    return "disjoint";
  case Valuation::Kind::level:
    return "level " + to_string(v.depth);
  case Valuation::Kind::indistinguishable:
    return "indistinguishable at " + to_string(v.depth);
  }
  return "?";
}

} // namespace

EngineReport compare_engine(const std::shared_ptr<const FiniteModelPair> &pair, std::size_t trials,
                            std::uint64_t seed) {
  const FiniteModel &model = pair->model();
  const FiniteGroup &group = model.group();
  const GroupTable table = enumerate_completion(model);
  const Depth bottom = model.bottom_depth();

  EngineReport report;
  report.model = model.name();
  report.trials = trials;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementIndex> pick_element(0, static_cast<ElementIndex>(group.order() - 1));
  // One step past the bottom exercises depths that repeat the last level.
  std::uniform_int_distribution<std::size_t> pick_depth(0, bottom.value() + 1);
  const auto random_element = [&] {
    const ElementIndex g = pick_element(rng);
    return embed(pair, FiniteElement{g}, Depth{pick_depth(rng)});
  };
  const auto table_index = [&](ElementIndex x) {
    return model.left_coset(x, bottom).min();
  };
  const auto fail = [&](std::string what) { report.mismatches.push_back(std::move(what)); };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Element f1 = random_element();
    const Element f2 = random_element();
    const std::string tag = "trial " + std::to_string(trial) + ": ";

    // mul: the set product of the two cosets must sit inside the claimed one.
    try {
      const Element p = mul(f1, f2);
      const ElementSet product = set_product(group, model.left_coset(f1.rep().index, f1.depth()),
                                             model.left_coset(f2.rep().index, f2.depth()));
      if (!product.is_subset_of(model.left_coset(p.rep().index, p.depth())))
        fail(tag + "mul " + describe(*pair, f1) + " * " + describe(*pair, f2) + " claims " +
             describe(*pair, p) + " but the set product leaves that coset");
      if (f1.depth() >= bottom && f2.depth() >= bottom) {
        const std::size_t i = std::lower_bound(table.reps.begin(), table.reps.end(), table_index(f1.rep().index)) - table.reps.begin();
        const std::size_t j = std::lower_bound(table.reps.begin(), table.reps.end(), table_index(f2.rep().index)) - table.reps.begin();
        if (p.depth() < bottom || table.reps[table.multiply(i, j)] != table_index(p.rep().index))
          fail(tag + "mul " + describe(*pair, f1) + " * " + describe(*pair, f2) +
               " disagrees with the completion table");
      }
    } catch (const PrecisionExhausted &) {
      if (pair->conj_depth(f2.rep(), Depth{0}) <= f1.depth())
        fail(tag + "mul " + describe(*pair, f1) + " * " + describe(*pair, f2) +
             " refused although depth 0 is attainable");
    }

    // inv
    try {
      const Element q = inv(f1);
      const ElementSet inverse = set_inverse(group, model.left_coset(f1.rep().index, f1.depth()));
      if (!inverse.is_subset_of(model.left_coset(q.rep().index, q.depth())))
        fail(tag + "inv " + describe(*pair, f1) + " claims " + describe(*pair, q) +
             " but the inverse set leaves that coset");
    } catch (const PrecisionExhausted &) {
      if (pair->conj_depth(f1.rep(), Depth{0}) <= f1.depth())
        fail(tag + "inv " + describe(*pair, f1) + " refused although depth 0 is attainable");
    }

    // eq_at_depth
    {
      const std::size_t top = std::min(f1.depth(), f2.depth()).value();
      const Depth d{std::uniform_int_distribution<std::size_t>(0, top)(rng)};
      const bool engine = eq_at_depth(f1, f2, d);
      const bool literal = model.left_coset(f1.rep().index, d) == model.left_coset(f2.rep().index, d);
      if (engine != literal)
        fail(tag + "eq_at_depth(" + describe(*pair, f1) + ", " + describe(*pair, f2) + ", " +
             to_string(d) + ") = " + (engine ? "true" : "false"));
    }

    // valuation
    {
      const Valuation engine = valuation(f1, f2);
      const Valuation literal = literal_valuation(model, f1, f2);
      if (!(engine == literal))
        fail(tag + "valuation(" + describe(*pair, f1) + ", " + describe(*pair, f2) + ") = " +
             describe(engine) + ", expected " + describe(literal));
    }

    // right_rep: the known left coset must lie in N_d h.
    {
      const Depth d{std::uniform_int_distribution<std::size_t>(0, f1.depth().value())(rng)};
      try {
        const FiniteElement h = right_rep(f1, d);
        if (!model.left_coset(f1.rep().index, f1.depth()).is_subset_of(model.right_coset(h.index, d)))
          fail(tag + "right_rep(" + describe(*pair, f1) + ", " + to_string(d) + ") = " +
               pair->render(h) + " but the filter's coset is not inside N h");
      } catch (const PrecisionExhausted &) {
        if (pair->conj_depth(f1.rep(), d) <= f1.depth())
          fail(tag + "right_rep(" + describe(*pair, f1) + ", " + to_string(d) +
               ") refused although feasible");
      }
    }
  }
  return report;
}

std::string to_json(const EngineReport &report, int indent) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["trials"] = report.trials;
  j["mismatches"] = report.mismatches;
  return j.dump(indent);
}

} // namespace commensurate::oracle
