#include "commensurate/oracle/oracle.hpp"

namespace commensurate::oracle {

std::vector<CoherentChain> coherent_chains(const FiniteModel &model) {
  const FiniteGroup &group = model.group();
  std::vector<CoherentChain> out;

  // Refine each level's coset into the left cosets of the next level.
  std::vector<CoherentChain> frontier;
  {
    std::vector<bool> covered(group.order(), false);
    for (ElementIndex x = 0; x < group.order(); ++x) {
      if (covered[x])
        continue;
      ElementSet coset = model.left_coset(x, Depth{0});
      for (ElementIndex y : coset.elements())
        covered[y] = true;
      frontier.push_back({{std::move(coset)}});
    }
  }
  for (std::size_t level = 1; level < model.chain_length(); ++level) {
    std::vector<CoherentChain> next;
    for (const CoherentChain &chain : frontier) {
      std::vector<bool> covered(group.order(), false);
      for (ElementIndex x : chain.cosets.back().elements()) {
        if (covered[x])
          continue;
        ElementSet coset = model.left_coset(x, Depth{level});
        for (ElementIndex y : coset.elements())
          covered[y] = true;
        CoherentChain refined = chain;
        refined.cosets.push_back(std::move(coset));
        next.push_back(std::move(refined));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

bool left_right_check(const FiniteModel &model, const CoherentChain &chain) {
  const FiniteGroup &group = model.group();
  if (chain.cosets.empty())
    return false;
  const ElementSet &bottom = chain.cosets.back();
  std::optional<ElementSet> coarser_right;
  for (std::size_t level = 0; level < chain.cosets.size(); ++level) {
    const ElementSet &left = chain.cosets[level];
    const ElementSet &n = model.chain()[level];
    const Refinement refinement = refine_by_conjugates(model, n, left.min());
    if (!refinement.postcondition)
      return false;
    // The filter holds the M-coset through the bottom intersection, and it
    // must sit inside the level's left coset.
    const ElementSet km = set_product(group, ElementSet({bottom.min()}), refinement.m);
    if (!bottom.is_subset_of(km) || !km.is_subset_of(left))
      return false;

    std::optional<ElementSet> right;
    std::size_t holding_bottom = 0;
    std::vector<bool> covered(group.order(), false);
    for (ElementIndex h = 0; h < group.order(); ++h) {
      if (covered[h])
        continue;
      const ElementSet nh = model.right_coset(h, Depth{level});
      for (ElementIndex y : nh.elements())
        covered[y] = true;
      if (bottom.is_subset_of(nh)) {
        ++holding_bottom;
        right = nh;
      }
    }
    if (holding_bottom != 1 || !km.is_subset_of(*right))
      return false;
    if (coarser_right && !right->is_subset_of(*coarser_right))
      return false;
    coarser_right = right;
  }
  return true;
}

ExhaustiveReport verify_left_right(const FiniteModel &model) {
  ExhaustiveReport report;
  for (const CoherentChain &chain : coherent_chains(model)) {
    ++report.checks;
    if (!left_right_check(model, chain)) {
      std::string desc;
      for (const auto &c : chain.cosets)
        desc += (desc.empty() ? "" : " > ") + model.group().label(c.min()) + "N";
      report.failures.push_back(model.name() + ": chain " + desc + " has no coherent right cosets");
    }
  }
  return report;
}

} // namespace commensurate::oracle
